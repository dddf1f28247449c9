#ifndef KFE_RENDER_HPP
#define KFE_RENDER_HPP

#include <string>

#include <kfe/loginv.hpp>
#include <kfe/scalar.hpp>
#include <kfe/serialize.hpp>

namespace kfe
{

/// LaTeX for an exact scalar: polynomials in descending degree with the
/// denominators cleared, e.g. \frac{1}{12}(\lambda^2-1).
std::string latex(const Scalar &s);
std::string latex(const Poly &p);
std::string latex_symbol(Symbol s);

/// -1/((1+t) log^2(1+t)), 1/(1+t)^2 (1/log^2(1+t) + 2/log^3(1+t)), ...
std::string render_plain(const DerivativeFormula &f);
/// \frac{d^N}{dt^N}\frac{1}{\log(1+t)}=...
std::string render_latex(const DerivativeFormula &f);
json render_json(const DerivativeFormula &f);

} // namespace kfe

#endif
