#include "weakdp/pic_lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "weakdp/exact_int.hpp"

namespace wdp {

LatticeSignature::LatticeSignature(SeedForm form, int exceptional_count)
    : form_(form), n_(exceptional_count) {
    if (n_ < 0) throw std::invalid_argument("exceptional count must be non-negative");
    if (n_ > 64) throw std::invalid_argument("lattice rank out of supported range");
}

int64_t LatticeSignature::canonical_square() const {
    return (form_ == SeedForm::Plane ? 9 : 8) - n_;
}

DivisorClass::DivisorClass(LatticeSignature sig, std::vector<int64_t> coeffs)
    : sig_(sig), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != sig_.rank())
        throw std::invalid_argument("coefficient vector length does not match lattice rank");
}

DivisorClass DivisorClass::zero(LatticeSignature sig) {
    return DivisorClass(sig, std::vector<int64_t>(static_cast<size_t>(sig.rank()), 0));
}

DivisorClass DivisorClass::exceptional(LatticeSignature sig, int i) {
    if (i < 1 || i > sig.exceptional_count())
        throw std::invalid_argument("exceptional index out of range");
    auto c = std::vector<int64_t>(static_cast<size_t>(sig.rank()), 0);
    c[static_cast<size_t>(sig.base_rank() + i - 1)] = 1;
    return DivisorClass(sig, std::move(c));
}

int64_t DivisorClass::self_intersection() const { return intersect(*this, *this); }

bool DivisorClass::is_zero() const {
    for (int64_t c : coeffs_)
        if (c != 0) return false;
    return true;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch in divisor sum");
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return DivisorClass(sig_, std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch in divisor difference");
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
    return DivisorClass(sig_, std::move(c));
}

DivisorClass DivisorClass::operator-() const {
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(0, coeffs_[i]);
    return DivisorClass(sig_, std::move(c));
}

DivisorClass DivisorClass::operator*(int64_t k) const {
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(coeffs_[i], k);
    return DivisorClass(sig_, std::move(c));
}

int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
    const auto& sig = a.signature();
    if (sig != b.signature()) throw std::invalid_argument("signature mismatch in intersection");
    auto ca = a.coeffs();
    auto cb = b.coeffs();
    int64_t acc = 0;
    switch (sig.form()) {
        case SeedForm::Plane:
            acc = checked_mul(ca[0], cb[0]);
            break;
        case SeedForm::Quadric:
            acc = checked_add(checked_mul(ca[0], cb[1]), checked_mul(ca[1], cb[0]));
            break;
        case SeedForm::F2:
            acc = checked_add(checked_mul(ca[0], cb[1]), checked_mul(ca[1], cb[0]));
            acc = checked_sub(acc, checked_mul(2, checked_mul(ca[1], cb[1])));
            break;
    }
    for (int i = sig.base_rank(); i < sig.rank(); ++i)
        acc = checked_sub(acc, checked_mul(ca[static_cast<size_t>(i)], cb[static_cast<size_t>(i)]));
    return acc;
}

DivisorClass canonical_class(const LatticeSignature& sig) {
    std::vector<int64_t> c(static_cast<size_t>(sig.rank()), 1);
    switch (sig.form()) {
        case SeedForm::Plane:
            c[0] = -3;
            break;
        case SeedForm::Quadric:
            c[0] = -2;
            c[1] = -2;
            break;
        case SeedForm::F2:
            c[0] = -4;
            c[1] = -2;
            break;
    }
    return DivisorClass(sig, std::move(c));
}

int64_t euler_characteristic(const DivisorClass& d) {
    const auto k = canonical_class(d.signature());
    const int64_t num = checked_sub(d.self_intersection(), intersect(d, k));
    if (num % 2 != 0) throw std::logic_error("parity violation in Euler characteristic");
    return checked_add(1, num / 2);
}

DivisorClass blowup_pullback(const DivisorClass& d, const LatticeSignature& target) {
    const auto& sig = d.signature();
    if (target.form() != sig.form() || target.exceptional_count() != sig.exceptional_count() + 1)
        throw std::invalid_argument("pullback target must add exactly one exceptional class");
    std::vector<int64_t> c(d.coeffs().begin(), d.coeffs().end());
    c.push_back(0);
    return DivisorClass(target, std::move(c));
}

std::string to_string(const DivisorClass& d) {
    std::ostringstream os;
    const int base = d.signature().base_rank();
    os << "(";
    for (int i = 0; i < base; ++i) {
        if (i) os << ", ";
        os << d.coeff(i);
    }
    os << ";";
    for (int i = base; i < d.signature().rank(); ++i)
        os << (i == base ? " " : ", ") << d.coeff(i);
    os << ")";
    return os.str();
}

}  // namespace wdp
