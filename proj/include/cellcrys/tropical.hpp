#pragma once

#include <set>
#include <string>
#include <vector>

#include "cellcrys/basics.hpp"
#include "cellcrys/laurent.hpp"

namespace cellcrys {

// Min of a nonempty set of integer linear forms on Z^m (no constant terms).
// Duplicate forms are removed but no redundancy elimination is attempted.
class TropForm {
  public:
    TropForm() = default;
    explicit TropForm(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::set<std::vector<int>>& forms() const { return forms_; }
    std::size_t form_count() const { return forms_.size(); }
    bool empty() const { return forms_.empty(); }

    void add_form(const std::vector<int>& coeffs);
    void merge(const TropForm& o);

    std::int64_t eval(const std::vector<int>& x) const;
    // per-form values (for membership diagnostics)
    std::vector<std::int64_t> eval_each(const std::vector<int>& x) const;

    bool operator==(const TropForm& o) const {
        return nvars_ == o.nvars_ && forms_ == o.forms_;
    }

    std::string json() const;

  private:
    int nvars_ = 0;
    std::set<std::vector<int>> forms_;
};

// One linear form per monomial; integer coefficients drop. Requires a
// subtraction-free input.
TropForm tropicalize(const LaurentPoly& p);

// min over num-forms minus min over den-forms
struct TropRatio {
    TropForm num, den;
    std::int64_t eval(const std::vector<int>& x) const {
        std::int64_t v = num.eval(x);
        if (!den.empty()) v -= den.eval(x);
        return v;
    }
};

TropRatio tropicalize(const RationalPair& r);

}  // namespace cellcrys
