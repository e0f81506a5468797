#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <refitp/refitp.hpp>

namespace
{

// 0 success, 2 unreadable input, 3 the input implication does not hold,
// 4 too many variables for the truth-table sweep, 1 anything else
enum exit_code
{
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_invalid = 3,
    exit_cap = 4
};

struct strategy_flags
{
    std::string name = "random";
    std::uint64_t seed = 0;
};

refitp::strategy build_strategy( const strategy_flags& f, refitp::symbol_table& tab )
{
    if ( f.name == "random" )
        return refitp::strategy::seeded_random( f.seed );
    if ( f.name == "first" )
        return refitp::strategy::first_available();
    if ( f.name.starts_with( "scripted:" ) )
    {
        std::vector< refitp::variable > order;
        std::string rest = f.name.substr( 9 );
        std::size_t start = 0;
        while ( start <= rest.size() )
        {
            const std::size_t comma = rest.find( ',', start );
            const std::string token =
                rest.substr( start, comma == std::string::npos ? comma : comma - start );
            if ( token.empty() )
                throw refitp::parse_error( "empty variable in scripted order", start );
            order.push_back( tab.named( token ) );
            if ( comma == std::string::npos )
                break;
            start = comma + 1;
        }
        if ( order.empty() )
            throw refitp::parse_error( "scripted order needs at least one variable", 0 );
        return refitp::strategy::scripted( std::move( order ) );
    }
    throw refitp::parse_error( "--strategy expects random, first or scripted:<v1,v2,...>",
                               0 );
}

std::ostream& open_output( const std::string& path, std::ofstream& file )
{
    if ( path.empty() )
        return std::cout;
    file.open( path );
    if ( !file )
        throw refitp::error( "cannot open output file: " + path );
    return file;
}

int cmd_interpolate( const std::string& x_text, const std::string& y_text,
                     const strategy_flags& strat_flags, bool trace, bool do_simplify,
                     bool verify, bool no_check, int cap, const std::string& out_path )
{
    refitp::symbol_table tab;
    const auto x = refitp::parse_cnf_list( x_text, tab );
    const auto y = refitp::parse_dnf_list( y_text, tab );
    const refitp::strategy strat = build_strategy( strat_flags, tab );

    refitp::interpolate_options opts;
    opts.check_precondition = !no_check;
    opts.oracle_cap = cap;
    const auto result = refitp::interpolate( x, y, strat, opts );

    std::ofstream file;
    std::ostream& out = open_output( out_path, file );
    out << "interpolant: " << refitp::to_infix( result.interpolant ) << "\n";
    out << "parenthesized: "
        << refitp::to_infix( result.interpolant, refitp::infix_parens::full ) << "\n";
    if ( do_simplify )
        out << "simplified: " << refitp::to_infix( refitp::simplify( result.interpolant ) )
            << "\n";
    out << "eliminations: " << refitp::elimination_count( result.trace ) << "\n";
    if ( trace )
        out << refitp::render_trace( result.trace );
    if ( verify )
    {
        if ( !refitp::is_interpolant( x, y, result.interpolant, cap ) )
        {
            std::cerr << "verification failed\n";
            return exit_failure;
        }
        out << "verified: yes\n";
    }
    return exit_ok;
}

int cmd_check( const std::string& x_text, const std::string& y_text, int cap )
{
    refitp::symbol_table tab;
    refitp::normal_form g;
    g.x = refitp::parse_cnf_list( x_text, tab );
    g.y = refitp::parse_dnf_list( y_text, tab );
    if ( const auto cm = refitp::find_countermodel( g, cap ) )
    {
        std::cout << "INVALID under " << refitp::describe( *cm ) << "\n";
        return exit_invalid;
    }
    std::cout << "VALID\n";
    return exit_ok;
}

int cmd_refute( const std::string& z_text, int cap )
{
    refitp::symbol_table tab;
    refitp::clausal_form zf{ refitp::parse_cnf_list( z_text, tab ) };
    const auto tree = refitp::refute( zf );
    if ( !tree )
    {
        std::cout << "VALID\n";
        return exit_ok;
    }
    // a completed refutation certifies that the form is not valid
    std::cout << refitp::render_refutation( *tree );
    if ( const auto m = refitp::find_model( zf.z, cap ) )
        std::cout << "satisfied under " << refitp::describe( *m ) << "\n";
    return exit_invalid;
}

int cmd_gen( const refitp::gen_config& cfg, long count, const std::string& out_path )
{
    refitp::pair_generator gen( cfg );
    std::ofstream file;
    std::ostream& out = open_output( out_path, file );
    for ( long i = 0; i < count; ++i )
    {
        const auto pair = gen.next();
        out << refitp::to_bracket( pair.x ) << "\t" << refitp::to_bracket( pair.y ) << "\n";
    }
    return exit_ok;
}

int cmd_bench( const refitp::bench_config& cfg, const std::string& out_path )
{
    std::ofstream file;
    std::ostream& out = open_output( out_path, file );
    out << refitp::csv_header << "\n";
    const auto rows = refitp::run_bench(
        cfg, [ &out ]( long, const refitp::experiment_record& r )
        { out << refitp::to_csv_row( r ) << "\n"; } );
    const auto s = refitp::summarize( rows );
    char line[ 256 ];
    std::snprintf( line, sizeof line,
                   "n=%zu mean_time=%.6f mean_size_interp=%.2f slope=%.9g "
                   "intercept=%.9g r2=%.4f\n",
                   s.n, s.mean_time, s.mean_size_interp, s.time_vs_size.slope,
                   s.time_vs_size.intercept, s.time_vs_size.r2 );
    std::cout << line;
    return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Interpolant construction by simultaneous literal elimination" };
    app.require_subcommand( 1 );

    std::string x_text, y_text, z_text, out_path;
    strategy_flags strat_flags;
    bool trace = false, do_simplify = false, verify = false, no_check = false;
    int cap = refitp::default_oracle_cap;

    auto add_common = [ & ]( CLI::App* cmd )
    {
        cmd->add_option( "--max-oracle-vars", cap,
                         "largest variable count the truth-table sweep accepts" )
            ->capture_default_str();
        cmd->add_option( "--out", out_path, "write output to this file instead of stdout" );
    };

    auto* interp = app.add_subcommand( "interpolate", "compute an interpolant for X -> Y" );
    interp->add_option( "--x", x_text, "CNF side, e.g. \"[D.p..Nq., D.q.]\"" )->required();
    interp->add_option( "--y", y_text, "DNF side, e.g. \"[C.p.]\"" )->required();
    interp->add_option( "--seed", strat_flags.seed, "seed for the random strategy" );
    interp->add_option( "--strategy", strat_flags.name,
                        "random, first or scripted:<v1,v2,...>" )
        ->capture_default_str();
    interp->add_flag( "--trace", trace, "print the elimination tree" );
    interp->add_flag( "--simplify", do_simplify, "also print the constant-free form" );
    interp->add_flag( "--verify", verify, "re-check the result against the truth table" );
    interp->add_flag( "--no-check", no_check, "skip the validity precheck of X -> Y" );
    add_common( interp );

    auto* check = app.add_subcommand( "check", "decide whether X -> Y is valid" );
    check->add_option( "--x", x_text, "CNF side" )->required();
    check->add_option( "--y", y_text, "DNF side" )->required();
    add_common( check );

    auto* refute = app.add_subcommand( "refute", "search for a refutation of Z -> falsum" );
    refute->add_option( "--z", z_text, "clause list, e.g. \"[D.p., D.Nq.]\"" )->required();
    add_common( refute );

    refitp::gen_config gen_cfg;
    long count = 1;
    auto* gen = app.add_subcommand( "gen", "emit random valid X -> Y pairs" );
    gen->add_option( "--c", gen_cfg.conjuncts, "clauses on the CNF side" )
        ->capture_default_str();
    gen->add_option( "--d", gen_cfg.disjuncts, "conjuncts on the DNF side" )
        ->capture_default_str();
    gen->add_option( "--max-vars", gen_cfg.max_vars, "variable pool size" )
        ->capture_default_str();
    gen->add_option( "--count", count, "how many pairs to emit" )->capture_default_str();
    gen->add_option( "--seed", gen_cfg.seed, "generator seed" );
    gen->add_option( "--negation-prob", gen_cfg.negation_prob,
                     "probability that a drawn literal is negated" )
        ->capture_default_str();
    gen->add_option( "--attempt-limit", gen_cfg.attempt_limit,
                     "rejection-sampling attempts per pair" )
        ->capture_default_str();
    add_common( gen );

    refitp::bench_config bench_cfg;
    auto* bench = app.add_subcommand( "bench", "generate, interpolate and time n instances" );
    bench->add_option( "--n", bench_cfg.runs, "number of instances" )->capture_default_str();
    bench->add_option( "--c", bench_cfg.gen.conjuncts, "clauses on the CNF side" )
        ->capture_default_str();
    bench->add_option( "--d", bench_cfg.gen.disjuncts, "conjuncts on the DNF side" )
        ->capture_default_str();
    bench->add_option( "--c-max", bench_cfg.c_max,
                       "draw the clause count per instance from [1, c-max]" );
    bench->add_option( "--d-max", bench_cfg.d_max,
                       "draw the conjunct count per instance from [1, d-max]" );
    bench->add_option( "--max-vars", bench_cfg.gen.max_vars, "variable pool size" )
        ->capture_default_str();
    bench->add_option( "--seed", bench_cfg.seed, "master seed" );
    bench->add_option( "--negation-prob", bench_cfg.gen.negation_prob,
                       "probability that a drawn literal is negated" )
        ->capture_default_str();
    bench->add_option( "--attempt-limit", bench_cfg.gen.attempt_limit,
                       "rejection-sampling attempts per pair" )
        ->capture_default_str();
    bench->add_flag( "--verify", bench_cfg.verify,
                     "re-check every interpolant against the truth table" );
    add_common( bench );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e );
        return code == 0 ? exit_ok : exit_parse;
    }

    try
    {
        if ( interp->parsed() )
            return cmd_interpolate( x_text, y_text, strat_flags, trace, do_simplify, verify,
                                    no_check, cap, out_path );
        if ( check->parsed() )
            return cmd_check( x_text, y_text, cap );
        if ( refute->parsed() )
            return cmd_refute( z_text, cap );
        if ( gen->parsed() )
        {
            gen_cfg.oracle_cap = cap;
            return cmd_gen( gen_cfg, count, out_path );
        }
        bench_cfg.gen.oracle_cap = cap;
        return cmd_bench( bench_cfg, out_path );
    }
    catch ( const refitp::parse_error& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
    catch ( const refitp::precondition_error& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    catch ( const refitp::oracle_cap_error& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    }
    catch ( const std::exception& e )
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}
