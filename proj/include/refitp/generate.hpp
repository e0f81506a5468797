#pragma once

#include <random>
#include <vector>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/semantics.hpp>

namespace refitp
{

struct gen_config
{
    int conjuncts = 10;        // clauses on the left side
    int disjuncts = 10;        // conjunctive elements on the right side
    int max_vars = 4;          // variable pool size; also the length cap per element
    double negation_prob = 0.5;
    std::uint64_t seed = 0;
    long attempt_limit = 1000000;
    int oracle_cap = default_oracle_cap;
};

struct generated_pair
{
    std::vector< clause > x;
    std::vector< co_clause > y;
    long attempts = 0; // candidates drawn, including the accepted one
};

namespace detail
{
    [[nodiscard]] inline bool draw_negated( std::mt19937_64& rng, double prob )
    {
        if ( prob == 0.5 )
            return ( rng() & 1 ) != 0;
        // 53-bit uniform in [0,1); enough resolution for a probability knob
        return static_cast< double >( rng() >> 11 ) * 0x1.0p-53 < prob;
    }

    template < element_form Form >
    [[nodiscard]] element< Form > draw_element( std::mt19937_64& rng, const gen_config& cfg )
    {
        const int pool = cfg.max_vars;
        const int length = static_cast< int >( rng() % static_cast< std::uint64_t >( pool ) ) + 1;

        // partial Fisher-Yates over the index pool gives distinct variables
        std::vector< int > indices( static_cast< std::size_t >( pool ) );
        for ( int i = 0; i < pool; ++i )
            indices[ static_cast< std::size_t >( i ) ] = i + 1;
        std::vector< literal > lits;
        lits.reserve( static_cast< std::size_t >( length ) );
        for ( int k = 0; k < length; ++k )
        {
            const auto remaining = static_cast< std::uint64_t >( pool - k );
            const auto pick = static_cast< std::size_t >( k ) +
                              static_cast< std::size_t >( rng() % remaining );
            std::swap( indices[ static_cast< std::size_t >( k ) ], indices[ pick ] );
            const int index = indices[ static_cast< std::size_t >( k ) ];
            variable v( index, default_variable_name( index, pool ) );
            lits.emplace_back( std::move( v ), draw_negated( rng, cfg.negation_prob ) );
        }
        return element< Form >::of( std::move( lits ) );
    }
} // namespace detail

[[nodiscard]] inline normal_form draw_candidate( std::mt19937_64& rng, const gen_config& cfg )
{
    if ( cfg.max_vars < 1 )
        throw generation_error( "variable pool must hold at least one variable" );
    if ( cfg.conjuncts < 1 || cfg.disjuncts < 1 )
        throw generation_error( "both sides need at least one element" );
    normal_form g;
    g.x.reserve( static_cast< std::size_t >( cfg.conjuncts ) );
    for ( int i = 0; i < cfg.conjuncts; ++i )
        g.x.push_back( detail::draw_element< element_form::disjunctive >( rng, cfg ) );
    g.y.reserve( static_cast< std::size_t >( cfg.disjuncts ) );
    for ( int i = 0; i < cfg.disjuncts; ++i )
        g.y.push_back( detail::draw_element< element_form::conjunctive >( rng, cfg ) );
    return g;
}

// Rejection sampling: draw until the implication from X to Y holds.
[[nodiscard]] inline generated_pair gen_pair( std::mt19937_64& rng, const gen_config& cfg )
{
    generated_pair out;
    for ( long attempt = 1; attempt <= cfg.attempt_limit; ++attempt )
    {
        normal_form g = draw_candidate( rng, cfg );
        if ( !find_countermodel( g, cfg.oracle_cap ) )
        {
            out.x = std::move( g.x );
            out.y = std::move( g.y );
            out.attempts = attempt;
            return out;
        }
    }
    throw generation_error( "no valid pair found within " +
                            std::to_string( cfg.attempt_limit ) + " attempts" );
}

[[nodiscard]] inline generated_pair gen_pair( const gen_config& cfg )
{
    std::mt19937_64 rng( cfg.seed );
    return gen_pair( rng, cfg );
}

// Stream of pairs from one engine; successive calls continue the sequence.
class pair_generator
{
    gen_config _cfg;
    std::mt19937_64 _rng;

public:
    explicit pair_generator( gen_config cfg ) : _cfg( cfg ), _rng( cfg.seed ) {}

    [[nodiscard]] const gen_config& config() const { return _cfg; }
    [[nodiscard]] generated_pair next() { return gen_pair( _rng, _cfg ); }
};

} // namespace refitp
