#pragma once

#include <refitp/core.hpp>
#include <refitp/formula.hpp>

namespace refitp
{

// Folding an element or a whole implication into a single formula tree.
// Sides fold left-to-right; empty sides become their neutral constants.

template < element_form Form >
[[nodiscard]] formula as_formula( const element< Form >& e )
{
    if ( e.is_constant() )
        return formula::constant( e.truth() );

    const bool conj = Form == element_form::conjunctive;
    formula out = formula::lit( e.literals().front() );
    for ( std::size_t i = 1; i < e.literals().size(); ++i )
    {
        formula next = formula::lit( e.literals()[ i ] );
        out = conj ? formula::conjunction( std::move( out ), std::move( next ) )
                   : formula::disjunction( std::move( out ), std::move( next ) );
    }
    return out;
}

[[nodiscard]] inline formula as_formula( const std::vector< clause >& side )
{
    if ( side.empty() )
        return formula::constant( true );
    formula out = as_formula( side.front() );
    for ( std::size_t i = 1; i < side.size(); ++i )
        out = formula::conjunction( std::move( out ), as_formula( side[ i ] ) );
    return out;
}

[[nodiscard]] inline formula as_formula( const std::vector< co_clause >& side )
{
    if ( side.empty() )
        return formula::constant( false );
    formula out = as_formula( side.front() );
    for ( std::size_t i = 1; i < side.size(); ++i )
        out = formula::disjunction( std::move( out ), as_formula( side[ i ] ) );
    return out;
}

[[nodiscard]] inline formula as_formula( const normal_form& g )
{
    return formula::implication( as_formula( g.x ), as_formula( g.y ) );
}

[[nodiscard]] inline formula as_formula( const clausal_form& zf )
{
    return formula::implication( as_formula( zf.z ), formula::constant( false ) );
}

namespace detail
{
    inline void count_into( const formula& f, size_metrics& m )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
            m.constant_occurrences += 1;
            return;
        case formula::kind::literal:
            m.literal_occurrences += 1;
            if ( f.as_literal().negated() )
                m.connective_count += 1; // the negation sign counts
            return;
        case formula::kind::negation:
            m.connective_count += 1;
            count_into( f.operand(), m );
            return;
        default:
            m.connective_count += 1;
            count_into( f.left(), m );
            count_into( f.right(), m );
        }
    }
} // namespace detail

[[nodiscard]] inline size_metrics measure( const formula& f )
{
    size_metrics m;
    detail::count_into( f, m );
    m.variable_count = vars_of( f ).size();
    return m;
}

[[nodiscard]] inline size_metrics measure( const normal_form& g )
{
    return measure( as_formula( g ) );
}

} // namespace refitp
