#pragma once

// Minimal RAII handle over an MPFR number. Internal to the library.

#include <mpfr.h>

#include <utility>

#include "rademacher/exact_field.hpp"

namespace rademacher::detail {

class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept : MpReal(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  MpReal& operator=(MpReal o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

/// Value of x at working precision prec (no error bound attached).
MpReal evaluate(const AlgebraicReal& x, mpfr_prec_t prec);

}  // namespace rademacher::detail
