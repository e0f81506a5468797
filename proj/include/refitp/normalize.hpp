#pragma once

#include <cassert>
#include <string>
#include <vector>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/formula.hpp>

namespace refitp
{

namespace detail
{
    // Negation normal form with implications and equivalences rewritten away.
    // The result uses only constants, literals, conjunction and disjunction.
    [[nodiscard]] inline formula nnf( const formula& f, bool negate )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
            return formula::constant( f.truth() != negate );
        case formula::kind::literal:
            return formula::lit( negate ? !f.as_literal() : f.as_literal() );
        case formula::kind::negation:
            return nnf( f.operand(), !negate );
        case formula::kind::conjunction:
            if ( negate )
                return formula::disjunction( nnf( f.left(), true ), nnf( f.right(), true ) );
            return formula::conjunction( nnf( f.left(), false ), nnf( f.right(), false ) );
        case formula::kind::disjunction:
            if ( negate )
                return formula::conjunction( nnf( f.left(), true ), nnf( f.right(), true ) );
            return formula::disjunction( nnf( f.left(), false ), nnf( f.right(), false ) );
        case formula::kind::implication:
            if ( negate ) // not (a -> b) is a and not b
                return formula::conjunction( nnf( f.left(), false ), nnf( f.right(), true ) );
            return formula::disjunction( nnf( f.left(), true ), nnf( f.right(), false ) );
        case formula::kind::equivalence:
            if ( negate ) // exclusive or: (a or b) and (not a or not b)
                return formula::conjunction(
                    formula::disjunction( nnf( f.left(), false ), nnf( f.right(), false ) ),
                    formula::disjunction( nnf( f.left(), true ), nnf( f.right(), true ) ) );
            return formula::conjunction(
                formula::disjunction( nnf( f.left(), true ), nnf( f.right(), false ) ),
                formula::disjunction( nnf( f.right(), true ), nnf( f.left(), false ) ) );
        }
        return formula::constant( false ); // unreachable
    }

    [[nodiscard]] inline clause join( const clause& a, const clause& b )
    {
        if ( a.is_constant() )
            return a.truth() ? clause::constant( true ) : b;
        if ( b.is_constant() )
            return b.truth() ? clause::constant( true ) : a;
        auto lits = a.literals();
        lits.insert( lits.end(), b.literals().begin(), b.literals().end() );
        return clause::of( std::move( lits ) );
    }

    [[nodiscard]] inline co_clause join( const co_clause& a, const co_clause& b )
    {
        if ( a.is_constant() )
            return a.truth() ? b : co_clause::constant( false );
        if ( b.is_constant() )
            return b.truth() ? a : co_clause::constant( false );
        auto lits = a.literals();
        lits.insert( lits.end(), b.literals().begin(), b.literals().end() );
        return co_clause::of( std::move( lits ) );
    }

    [[nodiscard]] inline std::vector< clause > cnf_of_nnf( const formula& f )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
            return { clause::constant( f.truth() ) };
        case formula::kind::literal:
            return { clause::of( { f.as_literal() } ) };
        case formula::kind::conjunction:
        {
            auto out = cnf_of_nnf( f.left() );
            auto rhs = cnf_of_nnf( f.right() );
            out.insert( out.end(), rhs.begin(), rhs.end() );
            return out;
        }
        case formula::kind::disjunction:
        {
            const auto lhs = cnf_of_nnf( f.left() );
            const auto rhs = cnf_of_nnf( f.right() );
            std::vector< clause > out;
            out.reserve( lhs.size() * rhs.size() );
            for ( const auto& a : lhs )
                for ( const auto& b : rhs )
                    out.push_back( join( a, b ) );
            return out;
        }
        default:
            assert( false ); // nnf leaves no other kinds behind
            return {};
        }
    }

    [[nodiscard]] inline std::vector< co_clause > dnf_of_nnf( const formula& f )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
            return { co_clause::constant( f.truth() ) };
        case formula::kind::literal:
            return { co_clause::of( { f.as_literal() } ) };
        case formula::kind::disjunction:
        {
            auto out = dnf_of_nnf( f.left() );
            auto rhs = dnf_of_nnf( f.right() );
            out.insert( out.end(), rhs.begin(), rhs.end() );
            return out;
        }
        case formula::kind::conjunction:
        {
            const auto lhs = dnf_of_nnf( f.left() );
            const auto rhs = dnf_of_nnf( f.right() );
            std::vector< co_clause > out;
            out.reserve( lhs.size() * rhs.size() );
            for ( const auto& a : lhs )
                for ( const auto& b : rhs )
                    out.push_back( join( a, b ) );
            return out;
        }
        default:
            assert( false );
            return {};
        }
    }
} // namespace detail

// Distributive conversion, exponential in the worst case by design. Duplicate
// or complementary literals inside one element are kept as they fall out.
[[nodiscard]] inline std::vector< clause > to_cnf( const formula& f )
{
    return detail::cnf_of_nnf( detail::nnf( f, false ) );
}

[[nodiscard]] inline std::vector< co_clause > to_dnf( const formula& f )
{
    return detail::dnf_of_nnf( detail::nnf( f, false ) );
}

// Shifts the consequent across the implication: x -> y becomes
// (x together with the complemented y) -> falsum.
[[nodiscard]] inline clausal_form to_clausal( const normal_form& g )
{
    clausal_form zf{ g.x };
    for ( auto& c : complement_side( g.y ) )
        zf.z.push_back( std::move( c ) );
    return zf;
}

// Inverse of to_clausal given the original antecedent length.
[[nodiscard]] inline normal_form from_clausal( const clausal_form& zf, std::size_t split_point )
{
    if ( split_point > zf.z.size() )
        throw error( "split point " + std::to_string( split_point ) + " exceeds form size " +
                     std::to_string( zf.z.size() ) );
    normal_form g;
    g.x.assign( zf.z.begin(), zf.z.begin() + static_cast< std::ptrdiff_t >( split_point ) );
    for ( std::size_t i = split_point; i < zf.z.size(); ++i )
        g.y.push_back( zf.z[ i ].complement() );
    return g;
}

} // namespace refitp
