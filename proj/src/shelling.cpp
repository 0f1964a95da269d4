#include "toric/shelling.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

class ShellingChecker {
public:
    explicit ShellingChecker(const FaceLattice& fl) : fl_(fl) {}

    // Facets of g lying in the union of the placed faces, provided that union
    // (intersected with g) is exactly their union.
    std::optional<std::vector<int>> prefix_set(int g, const std::vector<int>& placed) const {
        std::vector<int> s;
        for (int lambda : fl_.down[static_cast<std::size_t>(g)])
            for (int h : placed)
                if (fl_.contains(h, lambda)) {
                    s.push_back(lambda);
                    break;
                }
        if (s.empty()) return std::nullopt;
        const auto& gr = fl_[g].rays;
        for (int h : placed) {
            const auto& hr = fl_[h].rays;
            std::vector<int> inter;
            std::set_intersection(gr.begin(), gr.end(), hr.begin(), hr.end(), std::back_inserter(inter));
            bool covered = false;
            for (int lambda : s) {
                const auto& lr = fl_[lambda].rays;
                if (std::includes(lr.begin(), lr.end(), inter.begin(), inter.end())) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return std::nullopt;
        }
        return s;
    }

    // A shelling of the facets of face f beginning with the set s (in some order).
    std::optional<std::vector<int>> shell_with_prefix(int f, std::vector<int> s) {
        std::sort(s.begin(), s.end());
        const auto& facets = fl_.down[static_cast<std::size_t>(f)];
        if (fl_[f].dim <= 1) return facets;
        auto key = std::make_pair(f, s);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (facets.size() > 63) throw std::length_error("too many facets for shelling search");

        std::uint64_t required = 0;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (std::binary_search(s.begin(), s.end(), facets[i])) required |= std::uint64_t{1} << i;
        std::set<std::uint64_t> failed;
        std::vector<int> seq;
        const bool ok = search(facets, required, 0, seq, failed);
        std::optional<std::vector<int>> result;
        if (ok) result = seq;
        memo_.emplace(std::move(key), result);
        return result;
    }

    bool step_ok(int g, const std::vector<int>& placed, PrefixCertificate* cert) {
        if (placed.empty()) return shell_with_prefix(g, {}).has_value();
        auto s = prefix_set(g, placed);
        if (!s) return false;
        auto sub = shell_with_prefix(g, *s);
        if (!sub) return false;
        if (cert) {
            cert->facet = g;
            cert->initial_segment = *s;
            cert->sub_shelling = *sub;
        }
        return true;
    }

private:
    bool search(const std::vector<int>& facets, std::uint64_t required, std::uint64_t mask, std::vector<int>& seq,
                std::set<std::uint64_t>& failed) {
        const std::uint64_t full = (facets.size() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << facets.size()) - 1);
        if (mask == full) return true;
        if (failed.count(mask)) return false;
        const bool prefix_done = (mask & required) == required;
        std::vector<int> placed;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (mask >> i & 1) placed.push_back(facets[i]);
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (mask & bit) continue;
            if (!prefix_done && !(required & bit)) continue;
            if (!step_ok(facets[i], placed, nullptr)) continue;
            seq.push_back(facets[i]);
            if (search(facets, required, mask | bit, seq, failed)) return true;
            seq.pop_back();
        }
        failed.insert(mask);
        return false;
    }

    const FaceLattice& fl_;
    std::map<std::pair<int, std::vector<int>>, std::optional<std::vector<int>>> memo_;
};

}  // namespace

bool verify_shelling(const FaceLattice& fl, const std::vector<int>& order, std::vector<PrefixCertificate>* certificates) {
    if (fl.n == 0) return order.empty();
    std::vector<int> expected = fl.by_dim[static_cast<std::size_t>(fl.n - 1)];
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected) return false;
    ShellingChecker checker(fl);
    std::vector<int> placed;
    std::vector<PrefixCertificate> certs;
    for (int g : order) {
        PrefixCertificate cert;
        if (!checker.step_ok(g, placed, &cert)) return false;
        if (!placed.empty()) certs.push_back(std::move(cert));
        placed.push_back(g);
    }
    if (certificates) *certificates = std::move(certs);
    return true;
}

Shelling shelling(const FaceLattice& fl) {
    Shelling out;
    const int n = fl.n;
    if (n <= 1) {
        out.order = n == 0 ? std::vector<int>{} : fl.by_dim[0];
        out.perturbation = "none";
        return out;
    }
    const auto& rays = fl.cone.rays();
    const auto& normals = fl.cone.facet_normals();
    const auto nn = static_cast<std::size_t>(n);

    IntVector w(nn), c(nn);
    for (const auto& h : normals)
        for (std::size_t i = 0; i < nn; ++i) w[i] += h[i];
    for (const auto& r : rays)
        for (std::size_t i = 0; i < nn; ++i) c[i] += r[i];
    const Int wc = dot(w, c);

    // Facet face id for each normal.
    std::vector<int> facet_face(normals.size(), -1);
    for (int id : fl.by_dim[nn - 1]) facet_face[static_cast<std::size_t>(fl[id].facets.front())] = id;

    for (long k = 2; k < 10000; ++k) {
        IntVector v(nn);
        Int p = 1;
        for (std::size_t i = 0; i < nn; ++i) {
            v[i] = p;
            p *= k;
        }
        IntVector d(nn);
        const Int wv = dot(w, v);
        for (std::size_t i = 0; i < nn; ++i) d[i] = wc * v[i] - wv * c[i];
        if (is_zero(d)) continue;

        std::vector<std::pair<Rat, int>> params;
        bool degenerate = false;
        for (std::size_t h = 0; h < normals.size(); ++h) {
            Int hd = dot(normals[h], d);
            if (sgn(hd) == 0) {
                degenerate = true;
                break;
            }
            Rat t(-dot(normals[h], c), hd);
            t.canonicalize();
            params.emplace_back(t, facet_face[h]);
        }
        if (degenerate) continue;
        std::sort(params.begin(), params.end());
        for (std::size_t i = 1; i < params.size(); ++i)
            if (params[i].first == params[i - 1].first) degenerate = true;
        if (degenerate) continue;

        for (const auto& [t, id] : params)
            if (sgn(t) > 0) out.order.push_back(id);
        for (const auto& [t, id] : params)
            if (sgn(t) < 0) out.order.push_back(id);
        out.perturbation = "moment-curve direction with parameter " + std::to_string(k) +
                           (k == 2 ? "" : " after " + std::to_string(k - 2) + " degenerate tries");
        if (!verify_shelling(fl, out.order, &out.certificates))
            throw std::logic_error("line shelling failed verification");
        return out;
    }
    throw std::logic_error("no generic shelling direction found");
}

}  // namespace toric
