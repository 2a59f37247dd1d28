#pragma once

#include <stdexcept>
#include <string>

namespace pbwtor {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands declared over algebras of different variable counts, or module
/// vectors of different ranks.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// A commutation relation whose tail is not strictly below the reordered
/// pair, or whose leading coefficient vanishes.
struct AdmissibilityViolation : Error {
    int var_hi = -1;
    int var_lo = -1;
    AdmissibilityViolation(const std::string& msg, int hi, int lo)
        : Error(msg), var_hi(hi), var_lo(lo) {}
};

/// The overlap check found a triple of variables whose two association
/// orders rewrite to different standard forms.
struct AssociativityViolation : Error {
    int var_k = -1;
    int var_j = -1;
    int var_i = -1;
    AssociativityViolation(const std::string& msg, int k, int j, int i)
        : Error(msg), var_k(k), var_j(j), var_i(i) {}
};

/// A generator set claimed to generate a sub-bimodule two-sidedly failed the
/// post-hoc right-closure check.
struct TwoSidednessFailure : Error {
    explicit TwoSidednessFailure(const std::string& msg) : Error(msg) {}
};

/// A homology request needs a differential beyond the depth the resolution
/// was computed to (and the resolution is not certifiably finished).
struct InsufficientResolutionDepth : Error {
    explicit InsufficientResolutionDepth(const std::string& msg) : Error(msg) {}
};

/// Text input error; `line` and `col` are 1-based.
struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

}  // namespace pbwtor
