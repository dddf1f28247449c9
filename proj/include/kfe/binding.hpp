#ifndef KFE_BINDING_HPP
#define KFE_BINDING_HPP

#include <optional>
#include <string>

#include <kfe/scalar.hpp>
#include <kfe/series.hpp>

namespace kfe
{

/// A formal parameter that is either kept symbolic or bound to a rational.
class Binding
{
public:
    static Binding symbolic(Symbol s) { return Binding(s, std::nullopt); }
    static Binding bound(Symbol s, Rational v) { return Binding(s, std::move(v)); }

    Symbol symbol() const { return m_symbol; }
    bool is_symbolic() const { return !m_value.has_value(); }
    const std::optional<Rational> &bound_value() const { return m_value; }

    /// The symbol itself, or the bound rational.
    Scalar value() const { return m_value ? Scalar(*m_value) : Scalar::variable(m_symbol); }
    Domain domain() const { return m_value ? Domain::rational() : Domain::symbolic(m_symbol); }

    /// "sym" or the rational literal.
    std::string to_string() const { return m_value ? m_value->to_string() : "sym"; }

private:
    Binding(Symbol s, std::optional<Rational> v) : m_symbol(s), m_value(std::move(v)) {}

    Symbol m_symbol;
    std::optional<Rational> m_value;
};

} // namespace kfe

#endif
