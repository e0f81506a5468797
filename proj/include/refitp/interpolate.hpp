#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/formula.hpp>
#include <refitp/normalize.hpp>
#include <refitp/semantics.hpp>

namespace refitp
{

// How the two sub-interpolants are put back together after one elimination.
enum class assembly_case
{
    or_case,  // the variable never occurs on the y side
    and_case, // the variable never occurs on the x side
    standard  // it occurs on both, so it frames the result
};

// Why the recursion stopped at a leaf.
enum class base_case_kind
{
    no_shared_vars,
    no_pairs, // shared variables exist, but no complementary pair spans clauses
    x_empty,
    y_empty
};

struct split_partition
{
    std::vector< clause > x_pos_remainders;    // x clauses that held the positive literal
    std::vector< clause > x_neg_remainders;    // x clauses that held the negative literal
    std::vector< co_clause > y_neg_remainders; // y conjuncts that held the negative literal
    std::vector< co_clause > y_pos_remainders; // y conjuncts that held the positive literal
    std::vector< clause > x_untouched;
    std::vector< co_clause > y_untouched;
};

struct split_result
{
    split_partition partition;
    normal_form g1; // positive x remainders with negative y remainders
    normal_form g2; // negative x remainders with positive y remainders
};

// Eliminates every occurrence of the variable from both sides at once.
// Occurrences of one polarity are stripped from the clauses or conjuncts that
// hold them; an element stripped empty collapses to its neutral constant.
// An element holding both polarities contributes one remainder to each child.
[[nodiscard]] inline split_result split( const normal_form& g, const variable& v )
{
    {
        bool ok = false;
        for ( const auto& e : eliminable_variables( to_clausal( g ) ) )
            if ( e == v )
                ok = true;
        if ( !ok )
            throw not_eliminable_error( v.name() );
    }

    const literal pos( v, false );
    const literal neg( v, true );
    split_partition p;

    for ( const auto& c : g.x )
    {
        if ( !c.mentions( v ) )
        {
            p.x_untouched.push_back( c );
            continue;
        }
        if ( c.contains( pos ) )
            p.x_pos_remainders.push_back( c.without( pos ) );
        if ( c.contains( neg ) )
            p.x_neg_remainders.push_back( c.without( neg ) );
    }
    for ( const auto& c : g.y )
    {
        if ( !c.mentions( v ) )
        {
            p.y_untouched.push_back( c );
            continue;
        }
        if ( c.contains( neg ) )
            p.y_neg_remainders.push_back( c.without( neg ) );
        if ( c.contains( pos ) )
            p.y_pos_remainders.push_back( c.without( pos ) );
    }

    const auto with = []( const auto& remainders, const auto& untouched ) {
        auto side = remainders;
        side.insert( side.end(), untouched.begin(), untouched.end() );
        return side;
    };

    split_result out;
    out.g1 = normal_form{ with( p.x_pos_remainders, p.x_untouched ),
                          with( p.y_neg_remainders, p.y_untouched ) };
    out.g2 = normal_form{ with( p.x_neg_remainders, p.x_untouched ),
                          with( p.y_pos_remainders, p.y_untouched ) };
    out.partition = std::move( p );
    return out;
}

[[nodiscard]] inline formula assemble( const variable& v, assembly_case how, formula i1,
                                       formula i2 )
{
    switch ( how )
    {
    case assembly_case::or_case:
        return formula::disjunction( std::move( i1 ), std::move( i2 ) );
    case assembly_case::and_case:
        return formula::conjunction( std::move( i1 ), std::move( i2 ) );
    case assembly_case::standard:
        return formula::conjunction(
            formula::disjunction( formula::lit( literal( v, false ) ), std::move( i1 ) ),
            formula::disjunction( formula::lit( literal( v, true ) ), std::move( i2 ) ) );
    }
    assert( false );
    return formula::constant( false );
}

// Records how an interpolant was derived: one node per elimination with both
// resulting subproblems, one leaf per base case with the constant it chose
// when no variable could frame the result.
class elimination_trace
{
    struct node
    {
        std::vector< clause > x;
        std::vector< co_clause > y;
        bool is_leaf = true;
        base_case_kind base = base_case_kind::no_shared_vars;
        bool result = false;
        std::optional< variable > eliminated;
        assembly_case how = assembly_case::standard;
        std::shared_ptr< const node > g1;
        std::shared_ptr< const node > g2;
    };

    std::shared_ptr< const node > _n;

    explicit elimination_trace( std::shared_ptr< const node > n ) : _n( std::move( n ) ) {}

public:
    [[nodiscard]] static elimination_trace leaf( std::vector< clause > x,
                                                 std::vector< co_clause > y, base_case_kind base,
                                                 bool result )
    {
        node n;
        n.x = std::move( x );
        n.y = std::move( y );
        n.base = base;
        n.result = result;
        return elimination_trace( std::make_shared< const node >( std::move( n ) ) );
    }

    [[nodiscard]] static elimination_trace step( std::vector< clause > x,
                                                 std::vector< co_clause > y, const variable& v,
                                                 assembly_case how, const elimination_trace& g1,
                                                 const elimination_trace& g2 )
    {
        node n;
        n.x = std::move( x );
        n.y = std::move( y );
        n.is_leaf = false;
        n.eliminated = v;
        n.how = how;
        n.g1 = g1._n;
        n.g2 = g2._n;
        return elimination_trace( std::make_shared< const node >( std::move( n ) ) );
    }

    [[nodiscard]] const std::vector< clause >& x() const { return _n->x; }
    [[nodiscard]] const std::vector< co_clause >& y() const { return _n->y; }
    [[nodiscard]] bool is_leaf() const { return _n->is_leaf; }

    [[nodiscard]] base_case_kind base() const
    {
        assert( is_leaf() );
        return _n->base;
    }

    [[nodiscard]] bool result() const
    {
        assert( is_leaf() );
        return _n->result;
    }

    [[nodiscard]] const variable& eliminated() const
    {
        assert( !is_leaf() );
        return *_n->eliminated;
    }

    [[nodiscard]] assembly_case how() const
    {
        assert( !is_leaf() );
        return _n->how;
    }

    [[nodiscard]] elimination_trace g1() const
    {
        assert( !is_leaf() );
        return elimination_trace( _n->g1 );
    }

    [[nodiscard]] elimination_trace g2() const
    {
        assert( !is_leaf() );
        return elimination_trace( _n->g2 );
    }
};

[[nodiscard]] inline std::size_t elimination_count( const elimination_trace& t )
{
    if ( t.is_leaf() )
        return 0;
    return 1 + elimination_count( t.g1() ) + elimination_count( t.g2() );
}

namespace detail
{
    [[nodiscard]] inline std::uint64_t splitmix64( std::uint64_t x )
    {
        x += 0x9E3779B97F4A7C15ull;
        x = ( x ^ ( x >> 30 ) ) * 0xBF58476D1CE4E5B9ull;
        x = ( x ^ ( x >> 27 ) ) * 0x94D049BB133111EBull;
        return x ^ ( x >> 31 );
    }

    // Child seeds depend only on the node seed and which branch is taken, so
    // a seeded strategy picks the same variables no matter how siblings are
    // explored.
    [[nodiscard]] inline std::uint64_t derive_seed( std::uint64_t seed, int branch )
    {
        return splitmix64( seed ^ ( 0xD1B54A32D192ED03ull * ( std::uint64_t( branch ) + 1 ) ) );
    }
} // namespace detail

// Picks which eliminable variable goes next. The seeded strategy is fully
// portable (mt19937_64 with modulo selection); the scripted strategy consumes
// its order depth-first, first subproblem before second.
class strategy
{
public:
    enum class kind
    {
        seeded_random,
        scripted,
        first_available
    };

private:
    kind _kind;
    std::uint64_t _seed = 0;
    std::vector< variable > _script;

    explicit strategy( kind k ) : _kind( k ) {}

public:
    [[nodiscard]] static strategy seeded_random( std::uint64_t seed )
    {
        strategy s( kind::seeded_random );
        s._seed = seed;
        return s;
    }

    [[nodiscard]] static strategy scripted( std::vector< variable > order )
    {
        strategy s( kind::scripted );
        s._script = std::move( order );
        return s;
    }

    [[nodiscard]] static strategy first_available() { return strategy( kind::first_available ); }

    [[nodiscard]] kind what() const { return _kind; }
    [[nodiscard]] std::uint64_t seed() const { return _seed; }
    [[nodiscard]] const std::vector< variable >& script() const { return _script; }

    [[nodiscard]] variable choose( const std::vector< variable >& candidates,
                                   std::uint64_t node_seed, std::size_t& cursor ) const
    {
        assert( !candidates.empty() );
        switch ( _kind )
        {
        case kind::first_available:
            return candidates.front();
        case kind::seeded_random:
        {
            std::mt19937_64 eng( node_seed );
            return candidates[ eng() % candidates.size() ];
        }
        case kind::scripted:
        {
            if ( cursor >= _script.size() )
                throw strategy_error(
                    "scripted elimination order exhausted while pairs remain" );
            const variable v = _script[ cursor++ ];
            for ( const auto& c : candidates )
                if ( c == v )
                    return v;
            throw strategy_error( "scripted variable " + v.name() +
                                  " is not eliminable at this step" );
        }
        }
        assert( false );
        return candidates.front();
    }
};

struct interpolate_options
{
    bool check_precondition = true;
    int oracle_cap = default_oracle_cap;
};

struct interpolation_result
{
    formula interpolant;
    elimination_trace trace;
};

namespace detail
{
    struct interpolation_walk
    {
        const strategy& strat;
        std::size_t cursor = 0;
        int cap = default_oracle_cap;

        [[nodiscard]] interpolation_result run( const std::vector< clause >& x,
                                                const std::vector< co_clause >& y,
                                                std::uint64_t seed )
        {
            assert( !( x.empty() && y.empty() ) );

            bool shared = false;
            {
                const auto yv = vars_of( y );
                for ( const auto& v : vars_of( x ) )
                    if ( yv.contains( v ) )
                    {
                        shared = true;
                        break;
                    }
            }

            if ( shared )
            {
                const normal_form g{ x, y };
                const clausal_form z = to_clausal( g );
                const auto candidates = eliminable_variables( z );
                if ( !candidates.empty() )
                {
                    const variable v = strat.choose( candidates, seed, cursor );
                    const split_result sp = split( g, v );

                    // Termination hinges on this, so it stays on in release builds.
                    const auto r = rank( z );
                    if ( !( rank( to_clausal( sp.g1 ) ) < r && rank( to_clausal( sp.g2 ) ) < r ) )
                        throw std::logic_error( "elimination step did not decrease rank" );

                    bool in_x = false;
                    for ( const auto& c : x )
                        if ( c.mentions( v ) )
                            in_x = true;
                    bool in_y = false;
                    for ( const auto& c : y )
                        if ( c.mentions( v ) )
                            in_y = true;
                    assert( in_x || in_y );
                    const assembly_case how = !in_y ? assembly_case::or_case
                                            : !in_x ? assembly_case::and_case
                                                    : assembly_case::standard;

                    auto sub1 = run( sp.g1.x, sp.g1.y, derive_seed( seed, 0 ) );
                    auto sub2 = run( sp.g2.x, sp.g2.y, derive_seed( seed, 1 ) );
                    return { assemble( v, how, std::move( sub1.interpolant ),
                                       std::move( sub2.interpolant ) ),
                             elimination_trace::step( x, y, v, how, sub1.trace, sub2.trace ) };
                }
                // Shared variables without a complementary pair spanning two
                // clauses: the answer is a constant, falsum when the
                // antecedent is unsatisfiable.
                const bool truth = find_model( x, cap ).has_value();
                return { formula::constant( truth ),
                         elimination_trace::leaf( x, y, base_case_kind::no_pairs, truth ) };
            }

            if ( !x.empty() )
            {
                if ( !y.empty() )
                {
                    const bool truth = find_model( x, cap ).has_value();
                    return { formula::constant( truth ),
                             elimination_trace::leaf( x, y, base_case_kind::no_shared_vars,
                                                      truth ) };
                }
                return { formula::constant( false ),
                         elimination_trace::leaf( x, y, base_case_kind::y_empty, false ) };
            }
            return { formula::constant( true ),
                     elimination_trace::leaf( x, y, base_case_kind::x_empty, true ) };
        }
    };
} // namespace detail

// Computes an interpolant i with x entailing i and i entailing y. By default
// the implication is first checked for validity; the error for an invalid
// input carries a falsifying valuation.
[[nodiscard]] inline interpolation_result interpolate( const std::vector< clause >& x,
                                                       const std::vector< co_clause >& y,
                                                       const strategy& strat,
                                                       interpolate_options options = {} )
{
    if ( options.check_precondition )
        if ( auto cm = find_countermodel( normal_form{ x, y }, options.oracle_cap ) )
            throw precondition_error( describe( *cm ) );

    detail::interpolation_walk walk{ strat, 0, options.oracle_cap };
    return walk.run( x, y, strat.seed() );
}

[[nodiscard]] inline interpolation_result interpolate( const normal_form& g,
                                                       const strategy& strat,
                                                       interpolate_options options = {} )
{
    return interpolate( g.x, g.y, strat, options );
}

// Constant propagation through conjunction and disjunction, applied bottom-up
// to a fixed point: the result either is a constant or contains none.
// Never grows the tree.
[[nodiscard]] inline formula simplify( const formula& f )
{
    switch ( f.what() )
    {
    case formula::kind::constant:
    case formula::kind::literal:
        return f;
    case formula::kind::negation:
    {
        formula sub = simplify( f.operand() );
        if ( sub.what() == formula::kind::constant )
            return formula::constant( !sub.truth() );
        return formula::negation( std::move( sub ) );
    }
    case formula::kind::conjunction:
    {
        formula a = simplify( f.left() );
        formula b = simplify( f.right() );
        if ( a.what() == formula::kind::constant )
            return a.truth() ? b : formula::constant( false );
        if ( b.what() == formula::kind::constant )
            return b.truth() ? a : formula::constant( false );
        return formula::conjunction( std::move( a ), std::move( b ) );
    }
    case formula::kind::disjunction:
    {
        formula a = simplify( f.left() );
        formula b = simplify( f.right() );
        if ( a.what() == formula::kind::constant )
            return a.truth() ? formula::constant( true ) : b;
        if ( b.what() == formula::kind::constant )
            return b.truth() ? formula::constant( true ) : a;
        return formula::disjunction( std::move( a ), std::move( b ) );
    }
    case formula::kind::implication:
        return formula::implication( simplify( f.left() ), simplify( f.right() ) );
    case formula::kind::equivalence:
        return formula::equivalence( simplify( f.left() ), simplify( f.right() ) );
    }
    return f; // unreachable
}

} // namespace refitp
