#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "helpers.hpp"

// End-to-end checks for the claims this library stands on. Each test prints
// exactly one PASS/FAIL line so a log scrape can grade the whole binary;
// indented lines are informational only.
using namespace refitp;

namespace
{

void report( int criterion, bool ok, const std::string& text )
{
    std::printf( "%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, text.c_str() );
    std::fflush( stdout );
}

double seconds_since( std::chrono::steady_clock::time_point start )
{
    return std::chrono::duration< double >( std::chrono::steady_clock::now() - start )
        .count();
}

void collect_lines( const elimination_trace& t, std::vector< std::string >& out )
{
    out.push_back( trace_line( t.x(), t.y() ) );
    if ( !t.is_leaf() )
    {
        collect_lines( t.g1(), out );
        collect_lines( t.g2(), out );
    }
}

bool constant_free( const formula& f )
{
    using kind = formula::kind;
    switch ( f.what() )
    {
    case kind::constant:
        return false;
    case kind::literal:
        return true;
    case kind::negation:
        return constant_free( f.operand() );
    default:
        return constant_free( f.left() ) && constant_free( f.right() );
    }
}

// walks a trace re-deriving every split and checking that the measure the
// recursion descends on really shrank at each step
bool splits_descend( const elimination_trace& t )
{
    if ( t.is_leaf() )
        return true;
    const std::size_t parent = rank( to_clausal( normal_form{ t.x(), t.y() } ) );
    const std::size_t left = rank( to_clausal( normal_form{ t.g1().x(), t.g1().y() } ) );
    const std::size_t right = rank( to_clausal( normal_form{ t.g2().x(), t.g2().y() } ) );
    return left < parent && right < parent && splits_descend( t.g1() ) &&
           splits_descend( t.g2() );
}

} // namespace

TEST_CASE( "generated implications verify across three size settings" )
{
    const auto start = std::chrono::steady_clock::now();
    bool all_good = true;
    long total = 0;

    struct setting
    {
        int c, d, vars;
        bool draw_sizes;
    };
    const setting settings[] = { { 10, 10, 4, true }, { 20, 20, 4, false },
                                 { 20, 20, 10, false } };
    std::mt19937_64 rng( 20260823 );
    for ( const setting& s : settings )
        for ( int i = 0; i < 1000 && all_good; ++i )
        {
            gen_config cfg;
            cfg.max_vars = s.vars;
            cfg.conjuncts = s.draw_sizes ? static_cast< int >( rng() % s.c ) + 1 : s.c;
            cfg.disjuncts = s.draw_sizes ? static_cast< int >( rng() % s.d ) + 1 : s.d;
            const generated_pair pair = gen_pair( rng, cfg );
            interpolate_options opts;
            opts.check_precondition = false;
            const auto res =
                interpolate( pair.x, pair.y, strategy::seeded_random( rng() ), opts );
            if ( !is_interpolant( pair.x, pair.y, res.interpolant ) )
                all_good = false;
            ++total;
        }

    const double elapsed = seconds_since( start );
    const bool ok = all_good && total == 3000 && elapsed < 300.0;
    char text[ 160 ];
    std::snprintf( text, sizeof text,
                   "%ld generated implications across three size settings verified in %.1f s",
                   total, elapsed );
    report( 1, ok, text );
    REQUIRE( ok );
}

TEST_CASE( "the hand-picked shortcut formula verifies" )
{
    symbol_table tab;
    const auto x = parse_cnf_list( "[D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.]", tab );
    const auto y = parse_dnf_list( "[C.Np..r., C.Np..q., C.p..Nq.]", tab );
    const formula shortcut = parse_infix( "(p ∨ r ∨ q) ∧ (¬p ∨ ¬q)", tab );
    const bool ok = is_interpolant( x, y, shortcut );
    report( 2, ok, "the two-clause shortcut formula is a correct interpolant" );
    REQUIRE( ok );
}

TEST_CASE( "a scripted run reproduces the recorded elimination tree" )
{
    symbol_table tab;
    const auto x = parse_cnf_list( "[D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.]", tab );
    const auto y = parse_dnf_list( "[C.p..Nr., C.Np..q., C.p..Nq.]", tab );
    std::vector< variable > order;
    for ( const char* n : { "p", "q", "r", "q", "q" } )
        order.push_back( tab.named( n ) );
    const auto res = interpolate( x, y, strategy::scripted( order ) );

    const std::vector< std::string > expected = {
        "X:  [D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.] Y:  [C.p..Nr., C.Np..q., C.p..Nq.]",
        "X:  [D.Ns., D.q..r., D.Nr..s.] Y:  [C.q.]",
        "X:  [D.r., D.Ns., D.Nr..s.] Y:  []",
        "X:  [D.Ns., D.Nr..s.] Y:  [.1.]",
        "X:  [D.Nq., D.q..r., D.Nr..s.] Y:  [C.Nr., C.Nq.]",
        "X:  [D.q., D.Nq.] Y:  [.1., C.Nq.]",
        "X:  [.0.] Y:  [.1., .1.]",
        "X:  [.0.] Y:  [.1.]",
        "X:  [D.s., D.Nq.] Y:  [C.Nq.]",
        "X:  [D.s.] Y:  [.1.]",
        "X:  [.0., D.s.] Y:  []",
    };
    std::vector< std::string > actual;
    collect_lines( res.trace, actual );

    const std::string golden =
        "((p ∨ ((q ∨ ⊥) ∧ (¬q ∨ ⊤))) ∧ (¬p ∨ "
        "((r ∨ ((q ∨ ⊥) ∧ (¬q ∨ ⊥))) ∧ "
        "(¬r ∨ ((q ∨ ⊤) ∧ (¬q ∨ ⊥))))))";
    const bool lines_match = actual == expected;
    const bool formula_matches = to_infix( res.interpolant, infix_parens::full ) == golden;

    // the same formula joined with a conjunction under the top-level split is
    // the obvious transcription slip; it must not verify
    const std::string and_joined =
        "((p ∨ ((q ∨ ⊥) ∧ (¬q ∨ ⊤))) ∧ (¬p ∧ "
        "((r ∨ ((q ∨ ⊥) ∧ (¬q ∨ ⊥))) ∧ "
        "(¬r ∨ ((q ∨ ⊤) ∧ (¬q ∨ ⊥))))))";
    const bool variant_rejected = !is_interpolant( x, y, parse_infix( and_joined, tab ) );

    const bool ok = lines_match && formula_matches && variant_rejected &&
                    is_interpolant( x, y, res.interpolant );
    report( 3, ok,
            "scripted elimination reproduces all 11 recorded subproblem lines and the exact "
            "final formula; the and-joined variant of that formula fails verification" );
    REQUIRE( ok );
}

TEST_CASE( "single-variable edge inputs produce the recorded two-clause form" )
{
    bool ok = true;
    const std::string want = "(p ∨ ⊥) ∧ (¬p ∨ ⊤)";

    {
        symbol_table tab;
        const auto x = parse_cnf_list( "[D.p.]", tab );
        const auto y = parse_dnf_list( "[C.p.]", tab );
        const auto res = interpolate( x, y, strategy::first_available() );
        ok = ok && to_infix( res.interpolant ) == want;
        ok = ok && !res.trace.is_leaf();
        ok = ok && trace_line( res.trace.g1().x(), res.trace.g1().y() ) == "X:  [.0.] Y:  []";
        ok = ok && trace_line( res.trace.g2().x(), res.trace.g2().y() ) == "X:  [] Y:  [.1.]";
    }
    {
        symbol_table tab;
        const auto x = parse_cnf_list( "[D.p..Np., D.p..p.]", tab );
        const auto y = parse_dnf_list( "[C.p.]", tab );
        const auto res = interpolate( x, y, strategy::first_available() );
        ok = ok && to_infix( res.interpolant ) == want;
        ok = ok && !res.trace.is_leaf();
        ok = ok &&
             trace_line( res.trace.g1().x(), res.trace.g1().y() ) == "X:  [D.Np., .0.] Y:  []";
        ok = ok &&
             trace_line( res.trace.g2().x(), res.trace.g2().y() ) == "X:  [D.p.] Y:  [.1.]";
    }

    report( 4, ok,
            "both single-variable edge inputs yield (p ∨ ⊥) ∧ (¬p ∨ ⊤) "
            "with the recorded children" );
    REQUIRE( ok );
}

TEST_CASE( "refutation search agrees with the truth table exhaustively" )
{
    const auto start = std::chrono::steady_clock::now();

    // every element over two variables with at most two literals
    std::vector< std::string > alphabet = { ".0.", ".1." };
    const char* lits[] = { "p", "Np", "q", "Nq" };
    for ( const char* l : lits )
        alphabet.push_back( std::string( "D." ) + l + "." );
    for ( const char* a : lits )
        for ( const char* b : lits )
            alphabet.push_back( std::string( "D." ) + a + ".." + b + "." );

    long checked = 0;
    bool all_agree = true;
    auto visit = [ & ]( const std::vector< std::size_t >& indices )
    {
        std::string text = "[";
        for ( std::size_t i = 0; i < indices.size(); ++i )
        {
            if ( i > 0 )
                text += ", ";
            text += alphabet[ indices[ i ] ];
        }
        text += "]";
        symbol_table tab;
        const clausal_form zf{ parse_cnf_list( text, tab ) };
        const bool should_refute = !is_tautology( zf );
        if ( refute( zf ).has_value() != should_refute )
            all_agree = false;
        ++checked;
    };
    visit( {} );
    for ( std::size_t a = 0; a < alphabet.size(); ++a )
    {
        visit( { a } );
        for ( std::size_t b = 0; b < alphabet.size(); ++b )
        {
            visit( { a, b } );
            for ( std::size_t c = 0; c < alphabet.size(); ++c )
                visit( { a, b, c } );
        }
    }

    const double elapsed = seconds_since( start );
    const bool ok = all_agree && checked == 11155 && elapsed < 10.0;
    char text[ 160 ];
    std::snprintf( text, sizeof text,
                   "refutation search and truth table agree on all %ld small clause lists "
                   "(%.1f s)",
                   checked, elapsed );
    report( 5, ok, text );
    REQUIRE( ok );
}

TEST_CASE( "validity coincides with joint validity of the two halves" )
{
    test_util::fuzz f( 31337 );
    bool ok = true;
    for ( int i = 0; i < 500; ++i )
    {
        const normal_form g = f.pair( 4, 4, 3 );
        const bool whole = is_tautology( g );
        for ( const auto& v : eliminable_variables( to_clausal( g ) ) )
        {
            const split_result sp = split( g, v );
            if ( whole != ( is_tautology( sp.g1 ) && is_tautology( sp.g2 ) ) )
                ok = false;
        }
    }
    report( 6, ok,
            "on 500 random inputs, validity always equals joint validity of the two split "
            "halves, for every eliminable variable" );
    REQUIRE( ok );
}

TEST_CASE( "the comparison pair finishes in two eliminations" )
{
    symbol_table tab;
    const auto x = parse_cnf_list( "[D.p..Nq., D.Np..Nr., D.q.]", tab );
    const auto y = parse_dnf_list( "[C.q..Nr., C.Nq..Ns., C.s.]", tab );
    const auto res =
        interpolate( x, y, strategy::scripted( { tab.named( "q" ), tab.named( "r" ) } ) );
    const bool ok =
        elimination_count( res.trace ) == 2 && is_interpolant( x, y, res.interpolant );
    report( 7, ok, "the four-variable comparison pair needs exactly two eliminations" );
    REQUIRE( ok );
}

TEST_CASE( "constant propagation preserves meaning and sheds constants" )
{
    bool equivalent_everywhere = true;
    std::mt19937_64 rng( 55 );
    gen_config cfg;
    cfg.conjuncts = 6;
    cfg.disjuncts = 6;
    cfg.max_vars = 6;
    interpolate_options opts;
    opts.check_precondition = false;
    for ( int i = 0; i < 1000; ++i )
    {
        const generated_pair pair = gen_pair( rng, cfg );
        const auto res =
            interpolate( pair.x, pair.y, strategy::seeded_random( rng() ), opts );
        if ( !test_util::slow_equivalent( res.interpolant, simplify( res.interpolant ) ) )
            equivalent_everywhere = false;
    }

    symbol_table tab;
    const auto x = parse_cnf_list( "[D.p..Ns., D.q..r., D.Np..Nq., D.Nr..s.]", tab );
    const auto y = parse_dnf_list( "[C.p..Nr., C.Np..q., C.p..Nq.]", tab );
    std::vector< variable > order;
    for ( const char* n : { "p", "q", "r", "q", "q" } )
        order.push_back( tab.named( n ) );
    const auto res = interpolate( x, y, strategy::scripted( order ) );
    const formula slim = simplify( res.interpolant );
    const bool big_cleared =
        constant_free( slim ) && test_util::slow_equivalent( res.interpolant, slim );

    const formula tiny = simplify( parse_infix( "(p ∨ ⊥) ∧ (¬p ∨ ⊤)", tab ) );
    const bool tiny_exact = tiny.what() == formula::kind::literal && to_infix( tiny ) == "p";

    const bool ok = equivalent_everywhere && big_cleared && tiny_exact;
    report( 8, ok,
            "constant propagation kept 1000 interpolants equivalent, cleared the worked "
            "example of constants and reduced the two-clause form to p" );
    REQUIRE( ok );
}

TEST_CASE( "every recorded elimination lowers the descent measure" )
{
    bool ok = true;
    std::mt19937_64 rng( 99 );
    interpolate_options opts;
    opts.check_precondition = false;
    try
    {
        for ( int i = 0; i < 300; ++i )
        {
            gen_config cfg;
            cfg.max_vars = 4;
            cfg.conjuncts = static_cast< int >( rng() % 10 ) + 1;
            cfg.disjuncts = static_cast< int >( rng() % 10 ) + 1;
            const generated_pair pair = gen_pair( rng, cfg );
            const auto res =
                interpolate( pair.x, pair.y, strategy::seeded_random( rng() ), opts );
            if ( !splits_descend( res.trace ) )
                ok = false;
        }
    }
    catch ( const std::logic_error& )
    {
        // the engine's own descent guard tripping counts as a failure here
        ok = false;
    }
    report( 9, ok,
            "across 300 benchmark-style runs every recorded split strictly lowered the "
            "descent measure and the internal guard never fired" );
    REQUIRE( ok );
}

TEST_CASE( "a ten-thousand-instance benchmark holds together" )
{
    bench_config cfg;
    cfg.runs = 10000;
    cfg.gen.max_vars = 4;
    cfg.c_max = 10;
    cfg.d_max = 10;
    cfg.seed = 20260823;

    std::vector< std::string > csv;
    csv.push_back( std::string( csv_header ) );
    const auto rows = run_bench( cfg, [ & ]( long, const experiment_record& r )
                                 { csv.push_back( to_csv_row( r ) ); } );

    bool lossless = csv.size() == 10001;
    for ( std::size_t i = 1; i < csv.size() && lossless; ++i )
        lossless = to_csv_row( parse_csv_row( csv[ i ] ) ) == csv[ i ];

    const run_summary s = summarize( rows );
    const bool ok = lossless && s.n == 10000 && s.time_vs_size.slope > 0.0;
    report( 10, ok,
            "10000-instance benchmark completed with a lossless csv and a positive "
            "time-against-size slope" );
    std::printf( "  observed: mean_time=%.6f s, mean interpolant size=%.1f, slope=%.3g, "
                 "r2=%.3f\n",
                 s.mean_time, s.mean_size_interp, s.time_vs_size.slope, s.time_vs_size.r2 );
    std::printf( "  reference points quoted for comparison: 0.0032 s at size 165 and "
                 "0.011 s at size 346\n" );
    std::fflush( stdout );
    REQUIRE( ok );
}
