#pragma once

#include <stdexcept>
#include <string>

namespace clusterfan {

// Base class for every failure the engine can report.  Structural misuse
// (bad sizes, out-of-range indices) and falsified mathematical invariants
// both surface as subclasses so callers can tell them apart.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

// An array violates a D-tightness inequality; carries the first violated
// index pair (i, j): sum_{k<=i} a(k,j+1) > sum_{k<=i-1} a(k,j).
class NotDTight : public Error {
public:
    NotDTight(int i, int j)
        : Error("array is not D-tight: inequality violated at (i, j) = (" +
                std::to_string(i) + ", " + std::to_string(j) + ")"),
          i_(i), j_(j) {}
    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

// A triangular pattern violates a Gelfand-Tsetlin inequality.
class NotGT : public Error {
public:
    NotGT(int i, int j, const std::string& what_failed)
        : Error("pattern violates a GT inequality at (i, j) = (" +
                std::to_string(i) + ", " + std::to_string(j) + "): " + what_failed),
          i_(i), j_(j) {}
    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

// Exact polynomial division failed.  During seed mutation this falsifies
// the regularity of cluster variables and is a hard engine failure; the
// message carries the full context.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class NotMonic : public Error {
public:
    using Error::Error;
};

class NotTriangular : public Error {
public:
    using Error::Error;
};

class FrozenVertex : public Error {
public:
    using Error::Error;
};

// Two distinct polynomials carry the same leading array.
class LabelCollision : public Error {
public:
    using Error::Error;
};

// The tropical exchange certificate failed: lex-max of the in/out label
// combinations minus the mutated label left the tableau cone.
class TropicalRelationViolation : public Error {
public:
    using Error::Error;
};

class NotUnimodular : public Error {
public:
    using Error::Error;
};

class SingularGenerators : public Error {
public:
    using Error::Error;
};

class DegenerateFrozenSpan : public Error {
public:
    using Error::Error;
};

}  // namespace clusterfan
