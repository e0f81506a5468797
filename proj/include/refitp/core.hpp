#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace refitp
{

// A propositional variable. Identity is the positive index; the display name
// is carried along purely for printing and never takes part in comparisons,
// so the same variable may surface as "p" in one place and "P(1,4)" in another.
class variable
{
    int _index;
    std::string _display;

public:
    explicit variable( int index, std::string display = "" )
        : _index( index ), _display( std::move( display ) )
    {
        assert( _index >= 1 );
    }

    [[nodiscard]] int index() const { return _index; }

    [[nodiscard]] std::string name() const
    {
        if ( !_display.empty() )
            return _display;
        // Fallback that still re-parses to the same index.
        return "P(" + std::to_string( _index ) + "," + std::to_string( _index ) + ")";
    }

    friend bool operator==( const variable& a, const variable& b )
    {
        return a._index == b._index;
    }

    friend std::strong_ordering operator<=>( const variable& a, const variable& b )
    {
        return a._index <=> b._index;
    }
};

// Display names for machine-made variables: a wheel of lowercase letters
// starting at p (p..z, then a..o), falling back to P(index,pool) beyond 26.
inline std::string default_variable_name( int index, int pool_size )
{
    assert( index >= 1 );
    if ( index <= 26 )
    {
        const int letter = ( 15 + index - 1 ) % 26; // 'p' is the 16th letter
        return std::string( 1, static_cast< char >( 'a' + letter ) );
    }
    return "P(" + std::to_string( index ) + "," + std::to_string( pool_size ) + ")";
}

class literal
{
    variable _var;
    bool _negated;

public:
    explicit literal( variable var, bool negated = false )
        : _var( std::move( var ) ), _negated( negated )
    {}

    [[nodiscard]] const variable& var() const { return _var; }
    [[nodiscard]] bool negated() const { return _negated; }

    [[nodiscard]] literal complement() const { return literal( _var, !_negated ); }

    friend literal operator!( const literal& l ) { return l.complement(); }

    friend bool operator==( const literal& a, const literal& b )
    {
        return a._var == b._var && a._negated == b._negated;
    }

    friend std::strong_ordering operator<=>( const literal& a, const literal& b )
    {
        if ( auto cmp = a._var <=> b._var; cmp != 0 )
            return cmp;
        return a._negated <=> b._negated;
    }
};

enum class element_form
{
    disjunctive, // a clause, read as the disjunction of its literals
    conjunctive  // a conjunct, read as the conjunction of its literals
};

[[nodiscard]] constexpr element_form dual( element_form f )
{
    return f == element_form::disjunctive ? element_form::conjunctive
                                          : element_form::disjunctive;
}

// One element of a normal form: either a truth constant or an ordered,
// duplicate-preserving sequence of literals. The empty sequence is never
// stored; it collapses to the form's neutral constant (an empty disjunction
// is falsum, an empty conjunction is verum).
template < element_form Form >
class element
{
    bool _is_constant;
    bool _truth;
    std::vector< literal > _literals;

    element( bool is_constant, bool truth, std::vector< literal > lits )
        : _is_constant( is_constant ), _truth( truth ), _literals( std::move( lits ) )
    {}

public:
    static constexpr element_form form = Form;

    [[nodiscard]] static element constant( bool truth )
    {
        return element( true, truth, {} );
    }

    [[nodiscard]] static element of( std::vector< literal > lits )
    {
        if ( lits.empty() )
            return constant( Form == element_form::conjunctive );
        return element( false, false, std::move( lits ) );
    }

    [[nodiscard]] static element of( std::initializer_list< literal > lits )
    {
        return of( std::vector< literal >( lits ) );
    }

    [[nodiscard]] bool is_constant() const { return _is_constant; }

    [[nodiscard]] bool truth() const
    {
        assert( _is_constant );
        return _truth;
    }

    [[nodiscard]] const std::vector< literal >& literals() const
    {
        assert( !_is_constant );
        return _literals;
    }

    [[nodiscard]] bool contains( const literal& l ) const
    {
        if ( _is_constant )
            return false;
        for ( const auto& m : _literals )
            if ( m == l )
                return true;
        return false;
    }

    [[nodiscard]] bool mentions( const variable& v ) const
    {
        if ( _is_constant )
            return false;
        for ( const auto& m : _literals )
            if ( m.var() == v )
                return true;
        return false;
    }

    // Removes every occurrence of exactly this literal (its complement stays).
    // Stripping the last literal yields the neutral constant of this form.
    [[nodiscard]] element without( const literal& l ) const
    {
        assert( !_is_constant );
        std::vector< literal > rest;
        rest.reserve( _literals.size() );
        for ( const auto& m : _literals )
            if ( m != l )
                rest.push_back( m );
        return of( std::move( rest ) );
    }

    // De Morgan complement: flips the form, negates every literal in place,
    // and swaps the constants (verum with falsum).
    [[nodiscard]] element< dual( Form ) > complement() const
    {
        if ( _is_constant )
            return element< dual( Form ) >::constant( !_truth );
        std::vector< literal > lits;
        lits.reserve( _literals.size() );
        for ( const auto& m : _literals )
            lits.push_back( !m );
        return element< dual( Form ) >::of( std::move( lits ) );
    }

    friend bool operator==( const element& a, const element& b )
    {
        if ( a._is_constant != b._is_constant )
            return false;
        if ( a._is_constant )
            return a._truth == b._truth;
        return a._literals == b._literals;
    }
};

using clause = element< element_form::disjunctive >;
using co_clause = element< element_form::conjunctive >;

// An implication in normal form: the conjunction of x implies the
// disjunction of y. An empty x side reads as verum, an empty y side as falsum.
struct normal_form
{
    std::vector< clause > x;
    std::vector< co_clause > y;

    friend bool operator==( const normal_form&, const normal_form& ) = default;
};

// A normal form whose consequent is falsum: the conjunction of z implies bottom.
struct clausal_form
{
    std::vector< clause > z;

    friend bool operator==( const clausal_form&, const clausal_form& ) = default;
};

template < element_form Form >
[[nodiscard]] std::vector< element< dual( Form ) > >
complement_side( const std::vector< element< Form > >& side )
{
    std::vector< element< dual( Form ) > > out;
    out.reserve( side.size() );
    for ( const auto& e : side )
        out.push_back( e.complement() );
    return out;
}

template < element_form Form >
void collect_vars( const element< Form >& e, std::set< variable >& out )
{
    if ( e.is_constant() )
        return;
    for ( const auto& l : e.literals() )
        out.insert( l.var() );
}

template < element_form Form >
[[nodiscard]] std::set< variable > vars_of( const std::vector< element< Form > >& side )
{
    std::set< variable > out;
    for ( const auto& e : side )
        collect_vars( e, out );
    return out;
}

[[nodiscard]] inline std::set< variable > vars_of( const normal_form& g )
{
    auto out = vars_of( g.x );
    for ( const auto& e : g.y )
        collect_vars( e, out );
    return out;
}

[[nodiscard]] inline std::set< variable > vars_of( const clausal_form& zf )
{
    return vars_of( zf.z );
}

// Variables that occur positively in one clause and negatively in a different
// clause. A single clause containing both p and not-p does not by itself make
// p eliminable; the complementary pair has to span two distinct clauses.
[[nodiscard]] inline std::vector< variable > eliminable_variables( const clausal_form& zf )
{
    struct occurrences
    {
        std::set< std::size_t > positive;
        std::set< std::size_t > negative;
    };

    std::map< variable, occurrences > occ;
    for ( std::size_t i = 0; i < zf.z.size(); ++i )
    {
        const auto& c = zf.z[ i ];
        if ( c.is_constant() )
            continue;
        for ( const auto& l : c.literals() )
        {
            auto& o = occ[ l.var() ];
            ( l.negated() ? o.negative : o.positive ).insert( i );
        }
    }

    std::vector< variable > out;
    for ( const auto& [ v, o ] : occ )
    {
        if ( o.positive.empty() || o.negative.empty() )
            continue;
        const bool only_one_shared_clause =
            o.positive.size() == 1 && o.negative == o.positive;
        if ( !only_one_shared_clause )
            out.push_back( v );
    }
    return out; // already ascending: std::map iterates in variable order
}

[[nodiscard]] inline std::size_t rank( const clausal_form& zf )
{
    return eliminable_variables( zf ).size();
}

// Occurrence counts of an implication or formula as written out in full:
// size is the number of literal and constant occurrences together, and
// connectives include every negation sign.
struct size_metrics
{
    std::size_t literal_occurrences = 0;
    std::size_t constant_occurrences = 0;
    std::size_t connective_count = 0;
    std::size_t variable_count = 0;

    [[nodiscard]] std::size_t size() const
    {
        return literal_occurrences + constant_occurrences;
    }

    friend bool operator==( const size_metrics&, const size_metrics& ) = default;
};

} // namespace refitp
