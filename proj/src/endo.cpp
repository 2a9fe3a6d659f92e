#include "weakdp/endo.hpp"

#include <functional>
#include <stdexcept>

#include "weakdp/exact_int.hpp"

namespace wdp {

namespace {

// Pick rank-many loop classes forming a unimodular basis of the lattice.
// The boundary classes of a smooth complete toric surface span the Picard
// group, so such a subset exists; subsets are scanned in lexicographic
// order for determinism.
std::vector<int> unimodular_loop_basis(const SurfaceModel& model) {
    const int rank = model.signature().rank();
    const int len = model.loop_size();
    std::vector<int> pick;
    std::vector<int> result;
    std::function<bool(int)> search = [&](int start) {
        if (static_cast<int>(pick.size()) == rank) {
            IntMatrix m(static_cast<size_t>(rank), std::vector<int64_t>(static_cast<size_t>(rank)));
            for (int col = 0; col < rank; ++col) {
                const auto& cls = model.loop()[static_cast<size_t>(pick[static_cast<size_t>(col)])].cls;
                for (int row = 0; row < rank; ++row)
                    m[static_cast<size_t>(row)][static_cast<size_t>(col)] = cls.coeff(row);
            }
            const int64_t det = determinant(m);
            if (det == 1 || det == -1) {
                result = pick;
                return true;
            }
            return false;
        }
        for (int i = start; i < len; ++i) {
            pick.push_back(i);
            if (search(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!search(0)) throw std::logic_error("loop classes do not span the lattice unimodularly");
    return result;
}

}  // namespace

Endomorphism::Endomorphism(SurfaceModel surface, int64_t multiplier, IntMatrix pullback,
                           int64_t degree)
    : surface_(std::move(surface)), d_(multiplier), pullback_(std::move(pullback)),
      degree_(degree) {
    const size_t rank = static_cast<size_t>(surface_.signature().rank());
    if (pullback_.size() != rank)
        throw std::invalid_argument("pullback matrix rank mismatch");
    for (const auto& row : pullback_)
        if (row.size() != rank) throw std::invalid_argument("pullback matrix not square");
}

DivisorClass Endomorphism::pullback(const DivisorClass& c) const {
    if (c.signature() != surface_.signature())
        throw std::invalid_argument("class does not live on this surface");
    return DivisorClass(c.signature(),
                        matrix_apply(pullback_, {c.coeffs().begin(), c.coeffs().end()}));
}

Endomorphism mult_endomorphism(const SurfaceModel& model, int64_t d) {
    if (d <= 0) throw std::invalid_argument("multiplier must be positive");

    // Multiplication by d on the cocharacter lattice fixes every ray, hence
    // maps every cone of the fan to itself and descends to a self-morphism.
    for (const auto& v : model.fan().rays()) {
        const RayVec image{checked_mul(d, v.x), checked_mul(d, v.y)};
        if (image.x * v.y != image.y * v.x || image.x * v.x + image.y * v.y <= 0)
            throw std::logic_error("lattice multiple left its ray");
    }
    const IntMatrix lattice_map = identity_matrix(2, d);
    const int64_t degree = determinant(lattice_map);

    // Each boundary divisor pulls back to d times itself; extend to the
    // whole Picard group through a unimodular subset of the loop classes.
    const int rank = model.signature().rank();
    const auto basis = unimodular_loop_basis(model);
    IntMatrix b(static_cast<size_t>(rank), std::vector<int64_t>(static_cast<size_t>(rank)));
    for (int col = 0; col < rank; ++col) {
        const auto& cls = model.loop()[static_cast<size_t>(basis[static_cast<size_t>(col)])].cls;
        for (int row = 0; row < rank; ++row)
            b[static_cast<size_t>(row)][static_cast<size_t>(col)] = cls.coeff(row);
    }
    IntMatrix pullback(static_cast<size_t>(rank), std::vector<int64_t>(static_cast<size_t>(rank)));
    for (int k = 0; k < rank; ++k) {
        std::vector<int64_t> unit(static_cast<size_t>(rank), 0);
        unit[static_cast<size_t>(k)] = 1;
        const auto y = solve_integral(b, unit);
        if (!y) throw std::logic_error("unimodular basis failed to invert");
        // f* e_k = sum_j y_j * f*(B_j) = sum_j y_j * d * B_j
        for (int row = 0; row < rank; ++row) {
            int64_t acc = 0;
            for (int j = 0; j < rank; ++j)
                acc = checked_add(acc, checked_mul((*y)[static_cast<size_t>(j)],
                                                   checked_mul(d, b[static_cast<size_t>(row)][static_cast<size_t>(j)])));
            pullback[static_cast<size_t>(row)][static_cast<size_t>(k)] = acc;
        }
    }
    return Endomorphism(model, d, std::move(pullback), degree);
}

Endomorphism lift_through_blowup(const Endomorphism& e, int corner) {
    const SurfaceModel lifted = blowup_at(e.surface(), corner);
    const int rank = lifted.signature().rank();
    IntMatrix m = identity_matrix(rank, 0);
    const auto& old = e.pullback_matrix();
    for (size_t i = 0; i < old.size(); ++i)
        for (size_t j = 0; j < old.size(); ++j) m[i][j] = old[i][j];
    // The lifting square commutes with the total transform, and the new
    // exceptional curve satisfies f*E = dE.
    m[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 1)] = e.multiplier();
    return Endomorphism(lifted, e.multiplier(), std::move(m), e.degree());
}

RamificationLedger ramification_ledger(const Endomorphism& e) {
    const auto& model = e.surface();
    const DivisorClass k = canonical_class(model.signature());
    const DivisorClass ram = k - e.pullback(k);
    const int64_t c = e.multiplier() - 1;

    RamificationLedger ledger{e.multiplier(),
                              {},
                              DivisorClass::zero(model.signature()),
                              ram};
    DivisorClass branch = DivisorClass::zero(model.signature());
    for (const auto& r : model.loop()) {
        if (r.self_int < 0) {
            if (c > 0) ledger.branch_terms.emplace_back(r.name, c);
            branch = branch + r.cls * c;
        } else {
            ledger.z_class = ledger.z_class + r.cls * c;
        }
    }
    if (!(branch + ledger.z_class == ram))
        throw std::logic_error("ramification ledger does not reproduce K - f*K");
    return ledger;
}

PowerMap::PowerMap(int64_t d) : d_(d) {
    if (d <= 0) throw std::invalid_argument("power map exponent must be positive");
}

std::array<int64_t, 3> PowerMap::pull_coordinate(int i) const {
    if (i < 0 || i > 2) throw std::invalid_argument("coordinate index out of range");
    std::array<int64_t, 3> exp{0, 0, 0};
    exp[static_cast<size_t>(i)] = d_;
    return exp;
}

std::vector<int> PowerMap::preimage_of_point(int i) const {
    if (i < 0 || i > 2) throw std::invalid_argument("point index out of range");
    // The preimage satisfies X_j^d = 0 for j != i, so exactly the other two
    // coordinates vanish: that is the point itself.
    std::vector<int> vanishing;
    for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        const auto exp = pull_coordinate(j);
        if (exp[static_cast<size_t>(j)] > 0) vanishing.push_back(j);
    }
    if (vanishing.size() != 2) throw std::logic_error("power map preimage is not a single point");
    return {i};
}

LinePullback power_map_pullback(int line_index, int64_t d) {
    if (line_index < 1 || line_index > 3) throw std::invalid_argument("line index must be 1..3");
    const PowerMap f(d);
    const auto exp = f.pull_coordinate(line_index - 1);
    return LinePullback{line_index, exp[static_cast<size_t>(line_index - 1)]};
}

std::pair<int64_t, int64_t> power_map_canonical_identity(int64_t d) {
    const int64_t lhs = -3;
    const int64_t rhs = checked_add(checked_mul(-3, d), checked_mul(3, d - 1));
    return {lhs, rhs};
}

}  // namespace wdp
