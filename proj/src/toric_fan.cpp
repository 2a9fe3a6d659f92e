#include "weakdp/toric_fan.hpp"

#include <numeric>
#include <stdexcept>

#include "weakdp/exact_int.hpp"

namespace wdp {

namespace {

int64_t det2(const RayVec& a, const RayVec& b) {
    return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

bool primitive(const RayVec& v) {
    if (v.x == 0 && v.y == 0) return false;
    return std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y) == 1;
}

// Angle half-plane: 0 for [0, pi), 1 for [pi, 2pi).
int half(const RayVec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const RayVec& a, const RayVec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return det2(a, b) > 0;
}

}  // namespace

std::string_view seed_name(Seed s) {
    switch (s) {
        case Seed::P2: return "P2";
        case Seed::F0: return "F0";
        case Seed::F1: return "F1";
        case Seed::F2: return "F2";
    }
    throw std::logic_error("unreachable");
}

Seed parse_seed(std::string_view name) {
    if (name == "P2") return Seed::P2;
    if (name == "F0") return Seed::F0;
    if (name == "F1") return Seed::F1;
    if (name == "F2") return Seed::F2;
    throw std::invalid_argument("unknown seed name: " + std::string(name));
}

LabelCycle::LabelCycle(std::vector<int64_t> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 3) throw std::invalid_argument("label cycle needs length >= 3");
}

int64_t LabelCycle::k2() const {
    int64_t s = 0;
    for (int64_t a : labels_) s = checked_add(s, a);
    return checked_add(s, 2 * static_cast<int64_t>(labels_.size()));
}

bool check_smooth_complete(std::span<const RayVec> rays) {
    const int n = static_cast<int>(rays.size());
    if (n < 3) return false;
    for (const auto& v : rays)
        if (!primitive(v)) return false;
    int descents = 0;
    for (int i = 0; i < n; ++i) {
        const RayVec& a = rays[static_cast<size_t>(i)];
        const RayVec& b = rays[static_cast<size_t>((i + 1) % n)];
        if (det2(a, b) != 1) return false;
        if (angle_less(b, a)) ++descents;
    }
    return descents == 1;  // winds exactly once counterclockwise
}

bool check_smooth_complete(const Fan2D& fan) { return check_smooth_complete(fan.rays()); }

Fan2D::Fan2D(std::vector<RayVec> rays) : rays_(std::move(rays)) {
    if (!check_smooth_complete(rays_))
        throw std::invalid_argument("rays do not form a smooth complete counterclockwise fan");
}

Fan2D Fan2D::star_subdivide(int corner) const {
    const int n = size();
    if (corner < 0 || corner >= n) throw std::invalid_argument("corner index out of range");
    const RayVec& a = rays_[static_cast<size_t>(corner)];
    const RayVec& b = rays_[static_cast<size_t>((corner + 1) % n)];
    std::vector<RayVec> r = rays_;
    r.insert(r.begin() + corner + 1, RayVec{checked_add(a.x, b.x), checked_add(a.y, b.y)});
    return Fan2D(std::move(r));
}

Fan2D Fan2D::rotated_to_lex_min() const {
    int best = 0;
    for (int i = 1; i < size(); ++i) {
        const RayVec& v = rays_[static_cast<size_t>(i)];
        const RayVec& m = rays_[static_cast<size_t>(best)];
        if (v.x < m.x || (v.x == m.x && v.y < m.y)) best = i;
    }
    Fan2D out;
    out.rays_.reserve(rays_.size());
    for (int i = 0; i < size(); ++i)
        out.rays_.push_back(rays_[static_cast<size_t>((best + i) % size())]);
    return out;
}

Fan2D seed_fan(Seed s) {
    switch (s) {
        case Seed::P2: return Fan2D({{1, 0}, {0, 1}, {-1, -1}});
        case Seed::F0: return Fan2D({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
        case Seed::F1: return seed_fan(Seed::P2).star_subdivide(0);
        case Seed::F2: return Fan2D({{1, 0}, {0, 1}, {-1, 2}, {0, -1}});
    }
    throw std::logic_error("unreachable");
}

LabelCycle boundary_labels(const Fan2D& fan) {
    const int n = fan.size();
    std::vector<int64_t> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const RayVec& prev = fan.ray((i + n - 1) % n);
        const RayVec& cur = fan.ray(i);
        const RayVec& next = fan.ray((i + 1) % n);
        const RayVec sum{checked_add(prev.x, next.x), checked_add(prev.y, next.y)};
        // sum = -a * cur with a integral
        int64_t a;
        if (cur.x != 0) {
            if (sum.x % cur.x != 0) throw std::logic_error("neighbor sum not proportional to ray");
            a = -sum.x / cur.x;
        } else {
            if (cur.y == 0 || sum.y % cur.y != 0)
                throw std::logic_error("neighbor sum not proportional to ray");
            a = -sum.y / cur.y;
        }
        if (sum.x != checked_mul(-a, cur.x) || sum.y != checked_mul(-a, cur.y))
            throw std::logic_error("neighbor sum not proportional to ray");
        labels[static_cast<size_t>(i)] = a;
    }
    LabelCycle cycle(std::move(labels));
    if (cycle.k2() != 12 - fan.size())
        throw std::logic_error("Noether identity violated by computed labels");
    return cycle;
}

bool is_weak_del_pezzo(const Fan2D& fan) {
    const LabelCycle c = boundary_labels(fan);
    for (int64_t a : c.labels())
        if (a < -2) return false;
    return c.k2() > 0;
}

LabelCycle corner_insertion(const LabelCycle& c, int corner) {
    const int n = c.size();
    if (corner < 0 || corner >= n) throw std::invalid_argument("corner index out of range");
    std::vector<int64_t> out(c.labels().begin(), c.labels().end());
    out[static_cast<size_t>(corner)] -= 1;
    out[static_cast<size_t>((corner + 1) % n)] -= 1;
    out.insert(out.begin() + corner + 1, -1);
    return LabelCycle(std::move(out));
}

LabelCycle contract_minus_one(const LabelCycle& c, int pos) {
    const int n = c.size();
    if (pos < 0 || pos >= n) throw std::invalid_argument("position out of range");
    if (c.at(pos) != -1) throw std::invalid_argument("only a (-1)-component can be contracted");
    if (n <= 3) throw std::invalid_argument("cannot contract a cycle of length 3");
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i)
        if (i != pos) out.push_back(c.at(i));
    // neighbors of pos, re-indexed after the deletion
    const int left = (pos + n - 1) % n;
    const int right = (pos + 1) % n;
    const int left_new = left < pos ? left : left - 1;
    const int right_new = right < pos ? right : right - 1;
    out[static_cast<size_t>(left_new)] += 1;
    out[static_cast<size_t>(right_new)] += 1;
    return LabelCycle(std::move(out));
}

}  // namespace wdp
