#include "cellcrys/tropical.hpp"

#include <limits>
#include <sstream>

namespace cellcrys {

void TropForm::add_form(const std::vector<int>& coeffs) {
    check(static_cast<int>(coeffs.size()) == nvars_, "TropForm: size mismatch");
    forms_.insert(coeffs);
}

void TropForm::merge(const TropForm& o) {
    check(nvars_ == o.nvars_, "TropForm merge: size mismatch");
    for (const auto& f : o.forms_) forms_.insert(f);
}

std::int64_t TropForm::eval(const std::vector<int>& x) const {
    check(!forms_.empty(), "TropForm eval: empty form set");
    check(static_cast<int>(x.size()) == nvars_, "TropForm eval: point size mismatch");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& f : forms_) {
        std::int64_t v = 0;
        for (int k = 0; k < nvars_; ++k) v += static_cast<std::int64_t>(f[k]) * x[k];
        best = std::min(best, v);
    }
    return best;
}

std::vector<std::int64_t> TropForm::eval_each(const std::vector<int>& x) const {
    std::vector<std::int64_t> out;
    out.reserve(forms_.size());
    for (const auto& f : forms_) {
        std::int64_t v = 0;
        for (int k = 0; k < nvars_; ++k) v += static_cast<std::int64_t>(f[k]) * x[k];
        out.push_back(v);
    }
    return out;
}

std::string TropForm::json() const {
    std::ostringstream os;
    os << "{\"forms\":[";
    bool first = true;
    for (const auto& f : forms_) {
        if (!first) os << ",";
        first = false;
        os << "[";
        for (int k = 0; k < nvars_; ++k) {
            if (k) os << ",";
            os << f[k];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

TropForm tropicalize(const LaurentPoly& p) {
    check(!p.is_zero(), "tropicalize: zero polynomial");
    check(p.is_subtraction_free(), "tropicalize: subtraction present, undefined");
    TropForm t(p.nvars());
    for (const auto& [e, c] : p.terms()) t.add_form(e);
    return t;
}

TropRatio tropicalize(const RationalPair& r) {
    return TropRatio{tropicalize(r.num()), tropicalize(r.den())};
}

}  // namespace cellcrys
