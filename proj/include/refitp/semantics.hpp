#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/formula.hpp>

namespace refitp
{

using valuation = std::map< variable, bool >;

inline constexpr int default_oracle_cap = 20;

[[nodiscard]] inline std::string describe( const valuation& v )
{
    std::string out;
    for ( const auto& [ var, value ] : v )
    {
        if ( !out.empty() )
            out += ", ";
        out += var.name() + "=" + ( value ? "1" : "0" );
    }
    return out.empty() ? "(empty)" : out;
}

// ---- pointwise evaluation ----------------------------------------------

[[nodiscard]] inline bool evaluate( const literal& l, const valuation& v )
{
    const auto it = v.find( l.var() );
    if ( it == v.end() )
        throw unassigned_variable_error( l.var().name() );
    return l.negated() ? !it->second : it->second;
}

template < element_form Form >
[[nodiscard]] bool evaluate( const element< Form >& e, const valuation& v )
{
    if ( e.is_constant() )
        return e.truth();
    if constexpr ( Form == element_form::disjunctive )
    {
        for ( const auto& l : e.literals() )
            if ( evaluate( l, v ) )
                return true;
        return false;
    }
    else
    {
        for ( const auto& l : e.literals() )
            if ( !evaluate( l, v ) )
                return false;
        return true;
    }
}

[[nodiscard]] inline bool evaluate( const std::vector< clause >& side, const valuation& v )
{
    for ( const auto& c : side )
        if ( !evaluate( c, v ) )
            return false;
    return true; // empty conjunction of clauses is verum
}

[[nodiscard]] inline bool evaluate( const std::vector< co_clause >& side, const valuation& v )
{
    for ( const auto& c : side )
        if ( evaluate( c, v ) )
            return true;
    return false; // empty disjunction of conjuncts is falsum
}

[[nodiscard]] inline bool evaluate( const normal_form& g, const valuation& v )
{
    return !evaluate( g.x, v ) || evaluate( g.y, v );
}

[[nodiscard]] inline bool evaluate( const clausal_form& zf, const valuation& v )
{
    return !evaluate( zf.z, v );
}

[[nodiscard]] inline bool evaluate( const formula& f, const valuation& v )
{
    switch ( f.what() )
    {
    case formula::kind::constant:
        return f.truth();
    case formula::kind::literal:
        return evaluate( f.as_literal(), v );
    case formula::kind::negation:
        return !evaluate( f.operand(), v );
    case formula::kind::conjunction:
        return evaluate( f.left(), v ) && evaluate( f.right(), v );
    case formula::kind::disjunction:
        return evaluate( f.left(), v ) || evaluate( f.right(), v );
    case formula::kind::implication:
        return !evaluate( f.left(), v ) || evaluate( f.right(), v );
    case formula::kind::equivalence:
        return evaluate( f.left(), v ) == evaluate( f.right(), v );
    }
    return false; // unreachable
}

// ---- exhaustive sweeps ---------------------------------------------------
//
// Truth tables are swept 64 valuations at a time. With the distinct variables
// listed in ascending order, valuation number i assigns variable j the bit
// (i >> j) & 1; the low six variables therefore follow fixed bit patterns
// within each 64-bit block and the remaining ones select whole blocks.

namespace detail
{
    inline constexpr std::uint64_t low_var_pattern[ 6 ] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };

    using var_positions = std::map< variable, int >;

    [[nodiscard]] inline std::uint64_t var_block( int j, std::uint64_t block )
    {
        if ( j < 6 )
            return low_var_pattern[ j ];
        return ( ( block >> ( j - 6 ) ) & 1 ) ? ~0ull : 0ull;
    }

    [[nodiscard]] inline std::uint64_t lit_block( const literal& l, const var_positions& pos,
                                                  std::uint64_t block )
    {
        const std::uint64_t p = var_block( pos.at( l.var() ), block );
        return l.negated() ? ~p : p;
    }

    template < element_form Form >
    [[nodiscard]] std::uint64_t eval_block( const element< Form >& e, const var_positions& pos,
                                            std::uint64_t block )
    {
        if ( e.is_constant() )
            return e.truth() ? ~0ull : 0ull;
        if constexpr ( Form == element_form::disjunctive )
        {
            std::uint64_t acc = 0;
            for ( const auto& l : e.literals() )
            {
                acc |= lit_block( l, pos, block );
                if ( acc == ~0ull )
                    break;
            }
            return acc;
        }
        else
        {
            std::uint64_t acc = ~0ull;
            for ( const auto& l : e.literals() )
            {
                acc &= lit_block( l, pos, block );
                if ( acc == 0 )
                    break;
            }
            return acc;
        }
    }

    [[nodiscard]] inline std::uint64_t eval_block( const std::vector< clause >& side,
                                                   const var_positions& pos, std::uint64_t block )
    {
        std::uint64_t acc = ~0ull;
        for ( const auto& c : side )
        {
            acc &= eval_block( c, pos, block );
            if ( acc == 0 )
                break;
        }
        return acc;
    }

    [[nodiscard]] inline std::uint64_t eval_block( const std::vector< co_clause >& side,
                                                   const var_positions& pos, std::uint64_t block )
    {
        std::uint64_t acc = 0;
        for ( const auto& c : side )
        {
            acc |= eval_block( c, pos, block );
            if ( acc == ~0ull )
                break;
        }
        return acc;
    }

    [[nodiscard]] inline std::uint64_t eval_block( const formula& f, const var_positions& pos,
                                                   std::uint64_t block )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
            return f.truth() ? ~0ull : 0ull;
        case formula::kind::literal:
            return lit_block( f.as_literal(), pos, block );
        case formula::kind::negation:
            return ~eval_block( f.operand(), pos, block );
        case formula::kind::conjunction:
            return eval_block( f.left(), pos, block ) & eval_block( f.right(), pos, block );
        case formula::kind::disjunction:
            return eval_block( f.left(), pos, block ) | eval_block( f.right(), pos, block );
        case formula::kind::implication:
            return ~eval_block( f.left(), pos, block ) | eval_block( f.right(), pos, block );
        case formula::kind::equivalence:
            return ~( eval_block( f.left(), pos, block ) ^ eval_block( f.right(), pos, block ) );
        }
        return 0; // unreachable
    }

    struct sweep
    {
        std::vector< variable > vars;
        var_positions pos;
        std::uint64_t blocks = 1;
        std::uint64_t mask = ~0ull; // valid bits within each block

        sweep( std::set< variable > vs, int cap )
        {
            const int n = static_cast< int >( vs.size() );
            if ( n > cap )
                throw oracle_cap_error( cap, n );
            vars.assign( vs.begin(), vs.end() );
            for ( int j = 0; j < n; ++j )
                pos.emplace( vars[ j ], j );
            if ( n < 6 )
                mask = ( 1ull << ( 1ull << n ) ) - 1;
            if ( n > 6 )
                blocks = 1ull << ( n - 6 );
        }

        [[nodiscard]] valuation valuation_at( std::uint64_t index ) const
        {
            valuation v;
            for ( std::size_t j = 0; j < vars.size(); ++j )
                v.emplace( vars[ j ], ( ( index >> j ) & 1 ) != 0 );
            return v;
        }
    };

    [[nodiscard]] inline int lowest_set_bit( std::uint64_t x )
    {
        return std::countr_zero( x );
    }
} // namespace detail

// First valuation falsifying the implication, if any.
[[nodiscard]] inline std::optional< valuation > find_countermodel( const normal_form& g,
                                                                   int cap = default_oracle_cap )
{
    detail::sweep s( vars_of( g ), cap );
    for ( std::uint64_t b = 0; b < s.blocks; ++b )
    {
        const std::uint64_t ax = detail::eval_block( g.x, s.pos, b );
        if ( ax == 0 )
            continue; // antecedent false everywhere in this block
        const std::uint64_t value = ~ax | detail::eval_block( g.y, s.pos, b );
        const std::uint64_t bad = ~value & s.mask;
        if ( bad != 0 )
            return s.valuation_at( b * 64 + detail::lowest_set_bit( bad ) );
    }
    return std::nullopt;
}

// First valuation satisfying every clause of the side, if any.
[[nodiscard]] inline std::optional< valuation > find_model( const std::vector< clause >& side,
                                                            int cap = default_oracle_cap )
{
    detail::sweep s( vars_of( side ), cap );
    for ( std::uint64_t b = 0; b < s.blocks; ++b )
    {
        const std::uint64_t good = detail::eval_block( side, s.pos, b ) & s.mask;
        if ( good != 0 )
            return s.valuation_at( b * 64 + detail::lowest_set_bit( good ) );
    }
    return std::nullopt;
}

[[nodiscard]] inline bool is_tautology( const formula& f, int cap = default_oracle_cap )
{
    detail::sweep s( vars_of( f ), cap );
    for ( std::uint64_t b = 0; b < s.blocks; ++b )
        if ( ( ~detail::eval_block( f, s.pos, b ) & s.mask ) != 0 )
            return false;
    return true;
}

[[nodiscard]] inline bool is_tautology( const normal_form& g, int cap = default_oracle_cap )
{
    return !find_countermodel( g, cap ).has_value();
}

[[nodiscard]] inline bool is_tautology( const clausal_form& zf, int cap = default_oracle_cap )
{
    return !find_model( zf.z, cap ).has_value();
}

// Checks the full interpolant contract: the antecedent entails i, i entails
// the consequent, and, whenever the combined clausal form still has an
// eliminable complementary pair, i only uses variables common to both sides.
[[nodiscard]] inline bool is_interpolant( const std::vector< clause >& x,
                                          const std::vector< co_clause >& y, const formula& i,
                                          int cap = default_oracle_cap )
{
    std::set< variable > all = vars_of( x );
    for ( const auto& e : y )
        collect_vars( e, all );
    collect_vars( i, all );

    detail::sweep s( std::move( all ), cap );
    for ( std::uint64_t b = 0; b < s.blocks; ++b )
    {
        const std::uint64_t ax = detail::eval_block( x, s.pos, b );
        const std::uint64_t vi = detail::eval_block( i, s.pos, b );
        if ( ( ax & ~vi & s.mask ) != 0 )
            return false; // x true but i false somewhere
        const std::uint64_t oy = detail::eval_block( y, s.pos, b );
        if ( ( vi & ~oy & s.mask ) != 0 )
            return false; // i true but y false somewhere
    }

    const clausal_form z{ [ & ] {
        auto zs = x;
        for ( auto& c : complement_side( y ) )
            zs.push_back( std::move( c ) );
        return zs;
    }() };
    if ( !eliminable_variables( z ).empty() )
    {
        const auto xv = vars_of( x );
        const auto yv = vars_of( y );
        for ( const auto& v : vars_of( i ) )
            if ( !xv.contains( v ) || !yv.contains( v ) )
                return false;
    }
    return true;
}

} // namespace refitp
