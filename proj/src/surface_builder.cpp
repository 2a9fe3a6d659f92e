#include "weakdp/surface_builder.hpp"

#include <sstream>
#include <stdexcept>

namespace wdp {

namespace {

DivisorClass plane_h(const LatticeSignature& sig) {
    std::vector<int64_t> c(static_cast<size_t>(sig.rank()), 0);
    c[0] = 1;
    return DivisorClass(sig, c);
}

DivisorClass base_vec(const LatticeSignature& sig, int64_t c0, int64_t c1) {
    std::vector<int64_t> c(static_cast<size_t>(sig.rank()), 0);
    c[0] = c0;
    c[1] = c1;
    return DivisorClass(sig, c);
}

CurveRecord record(std::string name, DivisorClass cls) {
    const int64_t s = cls.self_intersection();
    return CurveRecord{std::move(name), std::move(cls), s, true};
}

}  // namespace

SurfaceModel::SurfaceModel(LatticeSignature sig, Fan2D fan, std::vector<CurveRecord> loop,
                           BlowupScript script)
    : sig_(sig), fan_(std::move(fan)), loop_(std::move(loop)), script_(std::move(script)) {
    if (static_cast<int>(loop_.size()) != fan_.size())
        throw std::invalid_argument("loop length does not match fan size");
    for (const auto& r : loop_)
        if (r.cls.signature() != sig_)
            throw std::invalid_argument("loop record signature mismatch");
}

SurfaceModel seed_model(Seed s) {
    BlowupScript script{s, {}, std::string(seed_name(s))};
    switch (s) {
        case Seed::P2: {
            LatticeSignature sig(SeedForm::Plane, 0);
            const auto h = plane_h(sig);
            return SurfaceModel(sig, seed_fan(s), {record("L1", h), record("L2", h), record("L3", h)},
                                script);
        }
        case Seed::F1: {
            // F1 is the plane blown up once: fibers H-E1, sections E1 and H.
            LatticeSignature sig(SeedForm::Plane, 1);
            const auto h = plane_h(sig);
            const auto e1 = DivisorClass::exceptional(sig, 1);
            return SurfaceModel(
                sig, seed_fan(s),
                {record("F1", h - e1), record("S-", e1), record("F2", h - e1), record("S+", h)},
                script);
        }
        case Seed::F0: {
            LatticeSignature sig(SeedForm::Quadric, 0);
            const auto f1 = base_vec(sig, 1, 0);
            const auto f2 = base_vec(sig, 0, 1);
            return SurfaceModel(
                sig, seed_fan(s),
                {record("A1", f1), record("B1", f2), record("A2", f1), record("B2", f2)}, script);
        }
        case Seed::F2: {
            LatticeSignature sig(SeedForm::F2, 0);
            const auto f = base_vec(sig, 1, 0);
            const auto sec = base_vec(sig, 0, 1);
            return SurfaceModel(
                sig, seed_fan(s),
                {record("F1", f), record("S-", sec), record("F2", f), record("S+", sec + f * 2)},
                script);
        }
    }
    throw std::logic_error("unreachable");
}

SurfaceModel blowup_at(const SurfaceModel& model, int corner) {
    const int len = model.loop_size();
    if (corner < 0 || corner >= len) {
        std::ostringstream os;
        os << "corner index " << corner << " out of range [0, " << len << ")";
        throw std::invalid_argument(os.str());
    }
    const auto& sig = model.signature();
    const LatticeSignature next_sig(sig.form(), sig.exceptional_count() + 1);
    const auto e_new = DivisorClass::exceptional(next_sig, next_sig.exceptional_count());

    std::vector<CurveRecord> loop;
    loop.reserve(static_cast<size_t>(len + 1));
    const int right = (corner + 1) % len;
    for (int i = 0; i < len; ++i) {
        const auto& r = model.loop()[static_cast<size_t>(i)];
        DivisorClass cls = blowup_pullback(r.cls, next_sig);
        if (i == corner || i == right) cls = cls - e_new;
        loop.push_back(record(r.name, std::move(cls)));
        if (i == corner) {
            const int seed_excs = model.script().seed == Seed::F1 ? 1 : 0;
            loop.push_back(record("E" + std::to_string(next_sig.exceptional_count() - seed_excs),
                                  e_new));
        }
    }

    BlowupScript script = model.script();
    script.steps.push_back(corner);
    return SurfaceModel(next_sig, model.fan().star_subdivide(corner), std::move(loop),
                        std::move(script));
}

SurfaceModel build_from_script(const BlowupScript& script) {
    SurfaceModel model = seed_model(script.seed);
    for (size_t k = 0; k < script.steps.size(); ++k) {
        try {
            model = blowup_at(model, script.steps[k]);
        } catch (const std::invalid_argument& e) {
            std::ostringstream os;
            os << "step " << (k + 1) << ": " << e.what();
            throw std::invalid_argument(os.str());
        }
    }
    return SurfaceModel(model.signature(), model.fan(), model.loop(), script);
}

DivisorClass loop_divisor(const SurfaceModel& model) {
    DivisorClass sum = DivisorClass::zero(model.signature());
    for (const auto& r : model.loop()) sum = sum + r.cls;
    if (!(sum + canonical_class(model.signature())).is_zero())
        throw std::logic_error("loop does not sum to the anticanonical class");
    return sum;
}

LabelCycle dual_graph_cycle(const SurfaceModel& model) {
    std::vector<int64_t> labels;
    labels.reserve(model.loop().size());
    for (const auto& r : model.loop()) labels.push_back(r.self_int);
    return LabelCycle(std::move(labels));
}

ValidationReport cross_validate(const SurfaceModel& model) {
    ValidationReport rep;
    auto fail = [&rep](std::string check, std::string detail) {
        rep.issues.push_back({std::move(check), std::move(detail)});
    };

    const int len = model.loop_size();
    if (len < 3) {
        fail("loop_length", "loop has fewer than 3 components");
        return rep;
    }

    for (const auto& r : model.loop()) {
        const int64_t sq = r.cls.self_intersection();
        if (sq != r.self_int) {
            std::ostringstream os;
            os << r.name << ": recorded self-intersection " << r.self_int << " but class gives "
               << sq;
            fail("record_self_intersection", os.str());
        }
    }

    const LabelCycle fan_labels = boundary_labels(model.fan());
    for (int i = 0; i < len; ++i) {
        const auto& r = model.loop()[static_cast<size_t>(i)];
        if (fan_labels.at(i) != r.self_int) {
            std::ostringstream os;
            os << "position " << i << " (" << r.name << "): fan label " << fan_labels.at(i)
               << ", lattice label " << r.self_int;
            fail("label_agreement", os.str());
        }
    }

    const int64_t k2_lattice = model.signature().canonical_square();
    if (k2_lattice != fan_labels.k2()) {
        std::ostringstream os;
        os << "lattice K^2 = " << k2_lattice << ", fan K^2 = " << fan_labels.k2();
        fail("k2_agreement", os.str());
    }

    DivisorClass sum = DivisorClass::zero(model.signature());
    for (const auto& r : model.loop()) sum = sum + r.cls;
    if (!(sum + canonical_class(model.signature())).is_zero())
        fail("anticanonical_sum", "loop classes sum to " + to_string(sum) + ", expected -K");

    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == len - 1);
            const int64_t expect = adjacent ? 1 : 0;
            const int64_t got =
                intersect(model.loop()[static_cast<size_t>(i)].cls, model.loop()[static_cast<size_t>(j)].cls);
            if (got != expect) {
                std::ostringstream os;
                os << model.loop()[static_cast<size_t>(i)].name << "."
                   << model.loop()[static_cast<size_t>(j)].name << " = " << got << ", expected "
                   << expect;
                fail("loop_simplicity", os.str());
            }
        }
    }
    return rep;
}

}  // namespace wdp
