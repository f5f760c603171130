#ifndef HULLCOH_ERROR_HPP
#define HULLCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hullcoh {

enum class errc {
  inconsistent,
  arity_mismatch,
  degree_mismatch,
  value_dim_mismatch,
  not_unipotent,
  not_nilpotent,
  not_in_u,
  not_in_span,
  invalid_presentation,
  not_closed,
  not_preserved,
  non_commuting,
  not_equivariant,
  not_symplectic,
  odd_dimension,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::inconsistent: return "Inconsistent";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::value_dim_mismatch: return "ValueDimMismatch";
    case errc::not_unipotent: return "NotUnipotent";
    case errc::not_nilpotent: return "NotNilpotent";
    case errc::not_in_u: return "NotInU";
    case errc::not_in_span: return "NotInSpan";
    case errc::invalid_presentation: return "InvalidPresentation";
    case errc::not_closed: return "NotClosed";
    case errc::not_preserved: return "NotPreserved";
    case errc::non_commuting: return "NonCommuting";
    case errc::not_equivariant: return "NotEquivariant";
    case errc::not_symplectic: return "NotSymplectic";
    case errc::odd_dimension: return "OddDimension";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace hullcoh

#endif
