#ifndef BIGRAV_ERRORS_HPP
#define BIGRAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bigrav {

enum class errc {
  ok = 0,
  invalid_argument,
  domain_error,
  pole_at_minus_two,
  negative_radicand,
  division_by_zero,
  degenerate_denominator,
  log_of_zero,
  quadrature_failure,
  out_of_range,
  no_convergence,
  boundary_divergence,
  domain_too_small,
  domain_too_large,
  out_of_domain,
  non_positive_radius,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace bigrav

#endif
