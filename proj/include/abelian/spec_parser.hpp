#pragma once

#include <memory>
#include <string>
#include <vector>

#include "abelian/generators.hpp"
#include "abelian/quadext.hpp"
#include "abelian/words.hpp"

namespace abelian {

/// Parse error with position and the token set that would have been accepted.
struct SpecError : std::runtime_error {
    SpecError(std::string msg, std::size_t column) : std::runtime_error(std::move(msg)), column(column) {}
    std::size_t column;
};

struct SpecNode;
using SpecPtr = std::shared_ptr<SpecNode>;

/// AST of the word-specification grammar. Atoms (numbers, words, keywords)
/// are leaf nodes; constructor applications carry arguments which may be
/// named (name=value) or substitution rules (from->to).
struct SpecNode {
    struct Arg {
        std::string name;       // "" for positional arguments
        std::string rule_from;  // non-empty for from->to rules
        SpecPtr value;
    };

    std::string head;
    bool is_call = false;  // parenthesized argument list present
    std::vector<Arg> args;
};

/// LL(1) recursive-descent parse; diagnostics carry column and expectations.
SpecPtr parse_spec(const std::string& text);

/// Canonical rendering; parse(render(ast)) yields an identical AST.
std::string render_spec(const SpecNode& node);

/// Evaluate a parsed spec to an infinite word.
InfiniteWord eval_spec(const SpecNode& node);
InfiniteWord word_from_spec(const std::string& text);

/// Evaluate a numeric node: a rational atom or quad(p, q, d).
QuadExt eval_number(const SpecNode& node);

/// Specialized evaluators for commands that need the rotation parameters.
TernaryRotationSpec ternary_spec_from(const SpecNode& node);
BinaryRotationSpec binary_spec_from(const SpecNode& node);

}  // namespace abelian
