#include "cellcrys/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cellcrys {

Iota Iota::cyclic(const CartanData& cd) {
    std::vector<int> c(cd.rank);
    for (int i = 0; i < cd.rank; ++i) c[i] = i + 1;
    return from_cycle(cd, std::move(c));
}

Iota Iota::from_cycle(const CartanData& cd, std::vector<int> cycle) {
    check(!cycle.empty(), "iota: empty cycle");
    std::vector<bool> seen(cd.rank + 1, false);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        check(cycle[k] >= 1 && cycle[k] <= cd.rank, "iota: letter out of range");
        check(cycle[k] != cycle[(k + 1) % cycle.size()],
              "iota: consecutive letters equal (violates the sequence condition)");
        seen[cycle[k]] = true;
    }
    for (int i = 1; i <= cd.rank; ++i)
        check(seen[i], "iota: letter " + std::to_string(i) + " never occurs");
    Iota io;
    io.cd = cd;
    io.cycle = std::move(cycle);
    return io;
}

int ZInfElem::support() const {
    for (int k = static_cast<int>(x.size()); k >= 1; --k)
        if (x[k - 1] != 0) return k;
    return 0;
}

std::int64_t ZInfElem::sigma_k(int k) const {
    std::int64_t s = get(k);
    int top = support();
    for (int j = k + 1; j <= top; ++j)
        s += static_cast<std::int64_t>(iota->cd.at(iota->at(k), iota->at(j))) * get(j);
    return s;
}

std::int64_t ZInfElem::sigma_i(int i) const {
    // sigma_k = 0 for k past the support, so scanning one extra cycle suffices
    std::int64_t best = 0;
    int top = support() + static_cast<int>(iota->cycle.size());
    for (int k = 1; k <= top; ++k)
        if (iota->at(k) == i) best = std::max(best, sigma_k(k));
    return best;
}

int ZInfElem::m_f(int i) const {
    std::int64_t best = sigma_i(i);
    int top = support() + static_cast<int>(iota->cycle.size());
    for (int k = 1; k <= top; ++k)
        if (iota->at(k) == i && sigma_k(k) == best) return k;
    check(false, "m_f: maximizer not found");
    return 0;
}

int ZInfElem::m_e(int i) const {
    std::int64_t best = sigma_i(i);
    check(best > 0, "m_e: sigma_i must be positive");
    int top = support() + static_cast<int>(iota->cycle.size());
    int last = 0;
    for (int k = 1; k <= top; ++k)
        if (iota->at(k) == i && sigma_k(k) == best) last = k;
    // sigma_k = 0 < best past the support, so the maximizer set is finite
    return last;
}

std::vector<std::int64_t> ZInfElem::wt_fund() const {
    std::vector<std::int64_t> w(iota->cd.rank, 0);
    int top = support();
    for (int k = 1; k <= top; ++k) {
        int c = iota->at(k);
        for (int j = 1; j <= iota->cd.rank; ++j)
            w[j - 1] -= static_cast<std::int64_t>(get(k)) * iota->cd.at(j, c);
    }
    return w;
}

std::int64_t ZInfElem::wt_pair(int i) const {
    std::int64_t s = 0;
    int top = support();
    for (int k = 1; k <= top; ++k)
        s -= static_cast<std::int64_t>(get(k)) * iota->cd.at(i, iota->at(k));
    return s;
}

std::optional<ZInfElem> ZInfElem::e(int i) const {
    if (sigma_i(i) <= 0) return std::nullopt;
    int k = m_e(i);
    ZInfElem out = *this;
    if (k > static_cast<int>(out.x.size())) out.x.resize(k, 0);
    out.x[k - 1] -= 1;
    return out;
}

std::optional<ZInfElem> ZInfElem::f(int i) const {
    int k = m_f(i);
    ZInfElem out = *this;
    if (k > static_cast<int>(out.x.size())) out.x.resize(k, 0);
    out.x[k - 1] += 1;
    return out;
}

bool ZInfElem::operator==(const ZInfElem& o) const {
    int a = support(), b = o.support();
    if (a != b) return false;
    for (int k = 1; k <= a; ++k)
        if (get(k) != o.get(k)) return false;
    return true;
}

std::size_t ZInfElem::hash() const {
    std::size_t h = 0x51ab;
    int top = support();
    for (int k = 1; k <= top; ++k) hash_mix(h, static_cast<std::size_t>(get(k) + (1 << 20)));
    return h;
}

void LinearFormInf::set(int k, const Rat& v) {
    if (v == 0)
        coef.erase(k);
    else
        coef[k] = v;
}

Rat LinearFormInf::eval(const ZInfElem& x) const {
    Rat s = 0;
    for (const auto& [k, c] : coef) s += c * Rat(x.get(k));
    return s;
}

LinearFormInf coordinate_form(int k) {
    LinearFormInf f;
    f.set(k, Rat(1));
    return f;
}

LinearFormInf beta_form(const Iota& iota, int k) {
    check(k >= 1, "beta_form: k must be >= 1");
    LinearFormInf b;
    int kp = iota.kplus(k);
    b.set(k, Rat(1));
    b.set(kp, Rat(1));
    for (int j = k + 1; j < kp; ++j)
        b.set(j, Rat(iota.cd.at(iota.at(k), iota.at(j))));
    return b;
}

LinearFormInf S_k(const Iota& iota, int k, const LinearFormInf& phi) {
    Rat pk = phi.at(k);
    if (pk == 0) return phi;
    LinearFormInf beta;
    if (pk > 0) {
        beta = beta_form(iota, k);
    } else {
        int km = iota.kminus(k);
        if (km == 0) return phi;  // beta_0 = 0
        beta = beta_form(iota, km);
    }
    LinearFormInf out = phi;
    for (const auto& [j, c] : beta.coef) out.set(j, out.at(j) - pk * c);
    return out;
}

XiResult generate_Xi(const Iota& iota, int window, std::size_t form_cap, int apply_cap) {
    XiResult res;
    std::deque<std::pair<LinearFormInf, int>> queue;  // form, S-applications used
    auto push = [&](const LinearFormInf& f, int gen) {
        if (res.forms.insert(f).second) {
            if (res.forms.size() > form_cap) return false;
            queue.emplace_back(f, gen);
        }
        return true;
    };
    res.stabilized = true;
    for (int k = 1; k <= window; ++k)
        if (!push(coordinate_form(k), 0)) res.stabilized = false;
    // S_k is only applied at positions within the window: an S-application at
    // k > window changes a form only in coordinates > window, so for elements
    // supported at least one cycle below the window the missing images
    // evaluate identically to forms already tracked.
    while (!queue.empty() && res.stabilized) {
        auto [f, gen] = queue.front();
        queue.pop_front();
        if (gen >= apply_cap) {
            res.stabilized = false;
            break;
        }
        for (int k = 1; k <= window; ++k) {
            LinearFormInf g = S_k(iota, k, f);
            if (g == f) continue;
            // forms reaching past the window are tracked but flagged
            if (!g.coef.empty() &&
                g.coef.rbegin()->first > window + static_cast<int>(iota.cycle.size())) {
                res.stabilized = false;
                break;
            }
            if (!push(g, gen + 1)) {
                res.stabilized = false;
                break;
            }
        }
    }
    res.positivity_ok = true;
    for (const auto& f : res.forms)
        for (const auto& [k, c] : f.coef)
            if (iota.kminus(k) == 0 && c < 0) res.positivity_ok = false;
    return res;
}

bool sigma_membership(const ZInfElem& x, const XiResult& xi) {
    for (const auto& f : xi.forms)
        if (f.eval(x) < 0) return false;
    return true;
}

std::string xi_json(const XiResult& xi) {
    std::ostringstream os;
    os << "{\"stabilized\":" << (xi.stabilized ? "true" : "false")
       << ",\"positivity\":" << (xi.positivity_ok ? "true" : "false") << ",\"forms\":[";
    bool first = true;
    for (const auto& f : xi.forms) {
        if (!first) os << ",";
        first = false;
        os << "{";
        bool f2 = true;
        for (const auto& [k, c] : f.coef) {
            if (!f2) os << ",";
            f2 = false;
            os << "\"" << k << "\":\"" << c << "\"";
        }
        os << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace cellcrys
