#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/generate.hpp>
#include <refitp/interpolate.hpp>
#include <refitp/measure.hpp>
#include <refitp/semantics.hpp>

namespace refitp
{

// One interpolation run. "xy" columns describe the input implication, the
// others the interpolant before and after constant propagation. The seed is
// enough to regenerate the instance together with the run's configuration.
struct experiment_record
{
    double time_sec = 0.0;
    std::size_t size_xy = 0;
    std::size_t size_interp = 0;
    std::size_t size_interp_simplified = 0;
    std::size_t connectives_xy = 0;
    std::size_t connectives_interp = 0;
    std::size_t vars_xy = 0;
    std::size_t vars_interp = 0;
    std::size_t eliminations = 0;
    std::uint64_t seed = 0;

    friend bool operator==( const experiment_record&, const experiment_record& ) = default;
};

inline constexpr std::string_view csv_header =
    "time_sec,size_xy,size_interp,size_interp_simplified,"
    "connectives_xy,connectives_interp,vars_xy,vars_interp,eliminations,seed";

[[nodiscard]] inline std::string to_csv_row( const experiment_record& r )
{
    char time_buf[ 32 ];
    std::snprintf( time_buf, sizeof time_buf, "%.9f", r.time_sec );
    std::string out = time_buf;
    for ( std::size_t field : { r.size_xy, r.size_interp, r.size_interp_simplified,
                                r.connectives_xy, r.connectives_interp, r.vars_xy,
                                r.vars_interp, r.eliminations } )
        out += "," + std::to_string( field );
    return out + "," + std::to_string( r.seed );
}

[[nodiscard]] inline experiment_record parse_csv_row( std::string_view row )
{
    std::vector< std::string > fields;
    std::size_t start = 0;
    while ( true )
    {
        const std::size_t comma = row.find( ',', start );
        fields.emplace_back( row.substr( start, comma - start ) );
        if ( comma == std::string_view::npos )
            break;
        start = comma + 1;
    }
    if ( fields.size() != 10 )
        throw error( "expected 10 comma-separated fields, found " +
                     std::to_string( fields.size() ) );
    try
    {
        experiment_record r;
        r.time_sec = std::stod( fields[ 0 ] );
        r.size_xy = std::stoul( fields[ 1 ] );
        r.size_interp = std::stoul( fields[ 2 ] );
        r.size_interp_simplified = std::stoul( fields[ 3 ] );
        r.connectives_xy = std::stoul( fields[ 4 ] );
        r.connectives_interp = std::stoul( fields[ 5 ] );
        r.vars_xy = std::stoul( fields[ 6 ] );
        r.vars_interp = std::stoul( fields[ 7 ] );
        r.eliminations = std::stoul( fields[ 8 ] );
        r.seed = std::stoull( fields[ 9 ] );
        return r;
    }
    catch ( const std::exception& )
    {
        throw error( "malformed numeric field in row: " + std::string( row ) );
    }
}

struct fit_line
{
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Ordinary least squares, two-pass for numerical steadiness. A flat x column
// has no defined slope; report the mean as intercept instead.
[[nodiscard]] inline fit_line least_squares( const std::vector< double >& xs,
                                             const std::vector< double >& ys )
{
    fit_line fit;
    const std::size_t n = xs.size();
    if ( n == 0 || n != ys.size() )
        return fit;
    double mean_x = 0.0, mean_y = 0.0;
    for ( std::size_t i = 0; i < n; ++i )
    {
        mean_x += xs[ i ];
        mean_y += ys[ i ];
    }
    mean_x /= static_cast< double >( n );
    mean_y /= static_cast< double >( n );
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for ( std::size_t i = 0; i < n; ++i )
    {
        const double dx = xs[ i ] - mean_x;
        const double dy = ys[ i ] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if ( sxx == 0.0 )
    {
        fit.intercept = mean_y;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.r2 = syy == 0.0 ? 1.0 : ( sxy * sxy ) / ( sxx * syy );
    if ( fit.r2 < 0.0 )
        fit.r2 = 0.0;
    if ( fit.r2 > 1.0 )
        fit.r2 = 1.0;
    return fit;
}

struct run_summary
{
    std::size_t n = 0;
    double mean_time = 0.0;
    double mean_size_interp = 0.0;
    fit_line time_vs_size; // run time against input size
};

[[nodiscard]] inline run_summary summarize( const std::vector< experiment_record >& rows )
{
    run_summary s;
    s.n = rows.size();
    if ( rows.empty() )
        return s;
    std::vector< double > xs, ys;
    xs.reserve( rows.size() );
    ys.reserve( rows.size() );
    for ( const auto& r : rows )
    {
        s.mean_time += r.time_sec;
        s.mean_size_interp += static_cast< double >( r.size_interp );
        xs.push_back( static_cast< double >( r.size_xy ) );
        ys.push_back( r.time_sec );
    }
    s.mean_time /= static_cast< double >( s.n );
    s.mean_size_interp /= static_cast< double >( s.n );
    s.time_vs_size = least_squares( xs, ys );
    return s;
}

struct bench_config
{
    long runs = 100;
    gen_config gen;   // per-instance template; its seed field is ignored here
    int c_max = 0;    // when positive, draw the clause count per instance in [1, c_max]
    int d_max = 0;    // same for the conjunct side
    std::uint64_t seed = 0;
    bool verify = false;
};

// Generates and interpolates one instance per run, timing only the
// interpolation itself. Instance seeds derive from the master seed and the
// run index, so a repeated run reproduces every column except time_sec.
[[nodiscard]] inline std::vector< experiment_record >
run_bench( const bench_config& cfg,
           const std::function< void( long, const experiment_record& ) >& on_row = {} )
{
    std::vector< experiment_record > rows;
    rows.reserve( static_cast< std::size_t >( cfg.runs > 0 ? cfg.runs : 0 ) );
    for ( long i = 0; i < cfg.runs; ++i )
    {
        const std::uint64_t gen_seed =
            detail::derive_seed( cfg.seed, static_cast< int >( 2 * i ) );
        const std::uint64_t strat_seed =
            detail::derive_seed( cfg.seed, static_cast< int >( 2 * i + 1 ) );

        gen_config gen = cfg.gen;
        gen.seed = gen_seed;
        std::mt19937_64 rng( gen_seed );
        if ( cfg.c_max > 0 )
            gen.conjuncts =
                static_cast< int >( rng() % static_cast< std::uint64_t >( cfg.c_max ) ) + 1;
        if ( cfg.d_max > 0 )
            gen.disjuncts =
                static_cast< int >( rng() % static_cast< std::uint64_t >( cfg.d_max ) ) + 1;
        generated_pair pair = gen_pair( rng, gen );

        interpolate_options opts;
        opts.check_precondition = false; // generation already rejected invalid pairs
        opts.oracle_cap = cfg.gen.oracle_cap;
        const strategy strat = strategy::seeded_random( strat_seed );

        const auto started = std::chrono::steady_clock::now();
        interpolation_result result = interpolate( pair.x, pair.y, strat, opts );
        const auto finished = std::chrono::steady_clock::now();

        if ( cfg.verify &&
             !is_interpolant( pair.x, pair.y, result.interpolant, cfg.gen.oracle_cap ) )
            throw error( "interpolant failed verification on run " + std::to_string( i ) );

        const formula simplified = simplify( result.interpolant );
        const size_metrics input = measure( normal_form{ pair.x, pair.y } );
        const size_metrics output = measure( result.interpolant );

        experiment_record r;
        r.time_sec = std::chrono::duration< double >( finished - started ).count();
        r.size_xy = input.size();
        r.size_interp = output.size();
        r.size_interp_simplified = measure( simplified ).size();
        r.connectives_xy = input.connective_count;
        r.connectives_interp = output.connective_count;
        r.vars_xy = input.variable_count;
        r.vars_interp = output.variable_count;
        r.eliminations = elimination_count( result.trace );
        r.seed = gen_seed;
        if ( on_row )
            on_row( i, r );
        rows.push_back( std::move( r ) );
    }
    return rows;
}

} // namespace refitp
