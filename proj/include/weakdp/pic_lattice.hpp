#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wdp {

// Picard lattice of an n-fold corner blow-up of a minimal toric seed.
//
// The seed determines the Gram block of the first coordinates:
//   Plane    basis (H; E1..En),      form diag(+1, -1, ..., -1)
//   Quadric  basis (f1, f2; E1..En), f1.f2 = 1, f1^2 = f2^2 = 0
//   F2       basis (f, s; E1..En),   f^2 = 0, f.s = 1, s^2 = -2
// Exceptional classes Ei always pair as Ei.Ej = -delta_ij and are
// orthogonal to the seed block.
enum class SeedForm { Plane, Quadric, F2 };

class LatticeSignature {
public:
    LatticeSignature(SeedForm form, int exceptional_count);
    static LatticeSignature plane(int exceptional_count) {
        return LatticeSignature(SeedForm::Plane, exceptional_count);
    }

    SeedForm form() const { return form_; }
    int exceptional_count() const { return n_; }
    int base_rank() const { return form_ == SeedForm::Plane ? 1 : 2; }
    int rank() const { return base_rank() + n_; }

    // Self-intersection of the canonical class: 9 - n on plane blow-ups,
    // 8 - n on Quadric/F2 blow-ups.
    int64_t canonical_square() const;

    bool operator==(const LatticeSignature&) const = default;

private:
    SeedForm form_;
    int n_;
};

// Immutable integer divisor class; safe to share across threads.
class DivisorClass {
public:
    DivisorClass(LatticeSignature sig, std::vector<int64_t> coeffs);
    static DivisorClass zero(LatticeSignature sig);
    // The i-th exceptional basis class (1-based among E's).
    static DivisorClass exceptional(LatticeSignature sig, int i);

    const LatticeSignature& signature() const { return sig_; }
    std::span<const int64_t> coeffs() const { return coeffs_; }
    int64_t coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    int64_t self_intersection() const;
    bool is_zero() const;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(int64_t k) const;
    bool operator==(const DivisorClass&) const = default;

private:
    LatticeSignature sig_;
    std::vector<int64_t> coeffs_;
};

// Exact intersection pairing. Throws std::invalid_argument on signature
// mismatch.
int64_t intersect(const DivisorClass& a, const DivisorClass& b);

// K = (-3; 1, ..., 1) on plane blow-ups, (-2, -2; 1, ...) on Quadric,
// (-4, -2; 1, ...) on F2.
DivisorClass canonical_class(const LatticeSignature& sig);

// Riemann-Roch Euler characteristic chi(O(D)) = 1 + (D.D - D.K)/2.
// D.(D - K) is even on these lattices; a parity violation signals internal
// corruption and throws std::logic_error.
int64_t euler_characteristic(const DivisorClass& d);

// Total transform along one blow-up: append coefficient 0 on the new
// exceptional class. Target must extend the source signature by exactly one.
DivisorClass blowup_pullback(const DivisorClass& d, const LatticeSignature& target);

// Rendering such as "(-3; 1, 1, 1)" for reports.
std::string to_string(const DivisorClass& d);

}  // namespace wdp
