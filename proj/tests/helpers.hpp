#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <refitp/refitp.hpp>

// Reference implementations and random instance builders for the test suite.
// The slow_* evaluators are written from the truth tables alone and share no
// code with the library's sweep, so the two can vouch for each other.
namespace test_util
{

using refitp::clausal_form;
using refitp::clause;
using refitp::co_clause;
using refitp::formula;
using refitp::literal;
using refitp::normal_form;
using refitp::valuation;
using refitp::variable;

inline bool slow_eval( const literal& l, const valuation& v )
{
    return v.at( l.var() ) != l.negated();
}

template < refitp::element_form Form >
bool slow_eval( const refitp::element< Form >& e, const valuation& v )
{
    if ( e.is_constant() )
        return e.truth();
    const bool disjunctive = Form == refitp::element_form::disjunctive;
    for ( const auto& l : e.literals() )
        if ( slow_eval( l, v ) == disjunctive )
            return disjunctive;
    return !disjunctive;
}

inline bool slow_eval( const std::vector< clause >& x, const valuation& v )
{
    for ( const auto& c : x )
        if ( !slow_eval( c, v ) )
            return false;
    return true;
}

inline bool slow_eval( const std::vector< co_clause >& y, const valuation& v )
{
    for ( const auto& c : y )
        if ( slow_eval( c, v ) )
            return true;
    return false;
}

inline bool slow_eval( const normal_form& g, const valuation& v )
{
    return !slow_eval( g.x, v ) || slow_eval( g.y, v );
}

inline bool slow_eval( const clausal_form& zf, const valuation& v )
{
    return !slow_eval( zf.z, v );
}

inline bool slow_eval( const formula& f, const valuation& v )
{
    using kind = formula::kind;
    switch ( f.what() )
    {
    case kind::constant:
        return f.truth();
    case kind::literal:
        return slow_eval( f.as_literal(), v );
    case kind::negation:
        return !slow_eval( f.operand(), v );
    case kind::conjunction:
        return slow_eval( f.left(), v ) && slow_eval( f.right(), v );
    case kind::disjunction:
        return slow_eval( f.left(), v ) || slow_eval( f.right(), v );
    case kind::implication:
        return !slow_eval( f.left(), v ) || slow_eval( f.right(), v );
    default:
        return slow_eval( f.left(), v ) == slow_eval( f.right(), v );
    }
}

// Calls fn with every valuation of the given variables; stops early when fn
// returns false. Returns whether fn held throughout.
template < typename Fn >
bool for_each_valuation( const std::set< variable >& vs, Fn&& fn )
{
    std::vector< variable > vars( vs.begin(), vs.end() );
    const std::uint64_t total = 1ull << vars.size();
    for ( std::uint64_t m = 0; m < total; ++m )
    {
        valuation v;
        for ( std::size_t j = 0; j < vars.size(); ++j )
            v.emplace( vars[ j ], ( ( m >> j ) & 1 ) != 0 );
        if ( !fn( v ) )
            return false;
    }
    return true;
}

template < typename T >
bool slow_tautology( const T& value )
{
    return for_each_valuation( refitp::vars_of( value ),
                               [ & ]( const valuation& v ) { return slow_eval( value, v ); } );
}

template < typename A, typename B >
bool slow_equivalent( const A& a, const B& b )
{
    auto vs = refitp::vars_of( a );
    for ( const auto& v : refitp::vars_of( b ) )
        vs.insert( v );
    return for_each_valuation( vs, [ & ]( const valuation& v )
                               { return slow_eval( a, v ) == slow_eval( b, v ); } );
}

// Random instances for property tests. Elements may repeat a variable or
// carry both polarities of one; the engine has to cope with both.
struct fuzz
{
    std::mt19937_64 rng;

    explicit fuzz( std::uint64_t seed ) : rng( seed ) {}

    int pick( int n ) { return static_cast< int >( rng() % static_cast< std::uint64_t >( n ) ); }
    bool coin() { return ( rng() & 1 ) != 0; }

    variable var( int pool )
    {
        const int index = pick( pool ) + 1;
        return variable( index, refitp::default_variable_name( index, pool ) );
    }

    literal lit( int pool ) { return literal( var( pool ), coin() ); }

    template < refitp::element_form Form >
    refitp::element< Form > elem( int pool, int max_len, bool allow_const )
    {
        if ( allow_const && pick( 8 ) == 0 )
            return refitp::element< Form >::constant( coin() );
        std::vector< literal > lits;
        const int len = pick( max_len ) + 1;
        for ( int i = 0; i < len; ++i )
            lits.push_back( lit( pool ) );
        return refitp::element< Form >::of( std::move( lits ) );
    }

    normal_form pair( int pool, int max_elems, int max_len, bool allow_const = true )
    {
        normal_form g;
        const int nx = pick( max_elems ) + 1;
        for ( int i = 0; i < nx; ++i )
            g.x.push_back( elem< refitp::element_form::disjunctive >( pool, max_len, allow_const ) );
        const int ny = pick( max_elems ) + 1;
        for ( int i = 0; i < ny; ++i )
            g.y.push_back( elem< refitp::element_form::conjunctive >( pool, max_len, allow_const ) );
        return g;
    }

    formula tree( int pool, int depth )
    {
        if ( depth <= 0 || pick( 4 ) == 0 )
        {
            if ( pick( 6 ) == 0 )
                return formula::constant( coin() );
            return formula::lit( lit( pool ) );
        }
        switch ( pick( 5 ) )
        {
        case 0:
        {
            formula sub = tree( pool, depth - 1 );
            // mirror the parser, which folds a negated literal into the
            // literal itself
            if ( sub.what() == formula::kind::literal )
                return formula::lit( !sub.as_literal() );
            return formula::negation( std::move( sub ) );
        }
        case 1:
            return formula::conjunction( tree( pool, depth - 1 ), tree( pool, depth - 1 ) );
        case 2:
            return formula::disjunction( tree( pool, depth - 1 ), tree( pool, depth - 1 ) );
        case 3:
            return formula::implication( tree( pool, depth - 1 ), tree( pool, depth - 1 ) );
        default:
            return formula::equivalence( tree( pool, depth - 1 ), tree( pool, depth - 1 ) );
        }
    }
};

inline variable plain_var( int index, const std::string& name )
{
    return variable( index, name );
}

} // namespace test_util
