#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkhom {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class BothZero : public Error {
   public:
    BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

class ZeroDenominator : public Error {
   public:
    ZeroDenominator() : Error("zero denominator") {}
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
};

/// Raised when a rational function (or a matrix of them) is evaluated at one
/// of its poles, i.e. the value is not in the local ring at that point.
class PoleAtPoint : public Error {
   public:
    explicit PoleAtPoint(const std::string& where) : Error("pole at point " + where) {}
};

class Singular : public Error {
   public:
    Singular() : Error("matrix is singular") {}
    using Error::Error;
};

class ShapeMismatch : public Error {
   public:
    ShapeMismatch(std::string list, std::size_t index, std::string expected, std::string got)
        : Error("shape mismatch in " + list + "[" + std::to_string(index) + "]: expected " + expected + ", got " +
                got),
          list_(std::move(list)),
          index_(index),
          expected_(std::move(expected)),
          got_(std::move(got)) {}

    const std::string& list() const noexcept { return list_; }
    std::size_t index() const noexcept { return index_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& got() const noexcept { return got_; }

   private:
    std::string list_;
    std::size_t index_;
    std::string expected_;
    std::string got_;
};

class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};

/// Conditions (II)/(III) were requested at a point where s does not vanish.
class NotASpecialPoint : public Error {
   public:
    explicit NotASpecialPoint(const std::string& point) : Error("s does not vanish at " + point) {}
};

/// The transported blocks G'_i and G''_i fail to be complementary at index i
/// (1-based), which is what a violation of condition (III) produces.
class ComplementarityFailure : public Error {
   public:
    explicit ComplementarityFailure(std::size_t index, const std::string& detail = {})
        : Error("G'_" + std::to_string(index) + " and G''_" + std::to_string(index) +
                " are not complementary at the point" + (detail.empty() ? "" : ": " + detail)),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

   private:
    std::size_t index_;
};

/// A full-rank requirement of the local splitting construction failed.
class FullRankFailure : public Error {
   public:
    enum class Which {
        ForwardTransport,   // g_{1,i} restricted to G'_1
        BackwardTransport,  // g^{n,i} restricted to G''_n
        ForwardBlock,       // (g_i)'
        BackwardBlock,      // (g^i)''
        NotPreserved,       // g_i or g^i does not respect the splitting
    };

    FullRankFailure(Which which, std::size_t index)
        : Error("full-rank check failed: " + describe(which) + " at index " + std::to_string(index)),
          which_(which),
          index_(index) {}

    Which which() const noexcept { return which_; }
    std::size_t index() const noexcept { return index_; }

    static std::string describe(Which w) {
        switch (w) {
            case Which::ForwardTransport: return "forward transport g_{1,i} on G'_1";
            case Which::BackwardTransport: return "backward transport g^{n,i} on G''_n";
            case Which::ForwardBlock: return "block map (g_i)'";
            case Which::BackwardBlock: return "block map (g^i)''";
            case Which::NotPreserved: return "splitting not preserved";
        }
        return "unknown";
    }

   private:
    Which which_;
    std::size_t index_;
};

class Infeasible : public Error {
   public:
    using Error::Error;
};

}  // namespace linkhom
