#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/formula.hpp>
#include <refitp/interpolate.hpp>
#include <refitp/measure.hpp>
#include <refitp/refutation.hpp>

namespace refitp
{

// Maps surface names to variable indices. Named identifiers get indices in
// order of first appearance; P(a,b) tokens carry their index directly. One
// table should serve every piece of one problem, so that "p" on the left
// side and "p" on the right side are the same variable.
class symbol_table
{
    std::map< std::string, int > _by_name;
    int _next = 1;

public:
    [[nodiscard]] variable named( const std::string& name )
    {
        auto it = _by_name.find( name );
        if ( it == _by_name.end() )
            it = _by_name.emplace( name, _next++ ).first;
        return variable( it->second, name );
    }

    [[nodiscard]] variable indexed( int index, std::string display )
    {
        return variable( index, std::move( display ) );
    }
};

namespace detail
{
    struct cursor
    {
        std::string_view s;
        std::size_t i = 0;

        [[nodiscard]] bool done() const { return i >= s.size(); }
        [[nodiscard]] char peek() const { return done() ? '\0' : s[ i ]; }

        bool eat( char c )
        {
            if ( peek() == c )
            {
                ++i;
                return true;
            }
            return false;
        }

        bool eat( std::string_view tok )
        {
            if ( s.substr( i ).starts_with( tok ) )
            {
                i += tok.size();
                return true;
            }
            return false;
        }

        void expect( char c, const std::string& what )
        {
            if ( !eat( c ) )
                throw parse_error( "expected " + what, i );
        }

        void skip_spaces()
        {
            while ( !done() && ( s[ i ] == ' ' || s[ i ] == '\t' ) )
                ++i;
        }
    };

    [[nodiscard]] inline bool lower_alpha( char c ) { return c >= 'a' && c <= 'z'; }
    [[nodiscard]] inline bool digit( char c ) { return c >= '0' && c <= '9'; }

    [[nodiscard]] inline int parse_nat( cursor& c )
    {
        if ( !digit( c.peek() ) )
            throw parse_error( "expected a number", c.i );
        long value = 0;
        while ( digit( c.peek() ) )
        {
            value = value * 10 + ( c.peek() - '0' );
            if ( value > 1000000000 )
                throw parse_error( "number too large", c.i );
            ++c.i;
        }
        return static_cast< int >( value );
    }

    // ident or P(index,total); the total is checked and kept for display only
    [[nodiscard]] inline variable parse_variable( cursor& c, symbol_table& tab )
    {
        if ( c.peek() == 'P' && c.i + 1 < c.s.size() && c.s[ c.i + 1 ] == '(' )
        {
            c.i += 2;
            const std::size_t at = c.i;
            const int index = parse_nat( c );
            if ( index < 1 )
                throw parse_error( "variable index must be positive", at );
            c.expect( ',', "','" );
            const std::size_t at_total = c.i;
            const int total = parse_nat( c );
            c.expect( ')', "')'" );
            if ( index > total )
                throw parse_error( "variable index exceeds the declared total", at_total );
            return tab.indexed( index, "P(" + std::to_string( index ) + "," +
                                            std::to_string( total ) + ")" );
        }
        if ( !lower_alpha( c.peek() ) )
            throw parse_error( "expected a variable name", c.i );
        std::string name;
        name += c.s[ c.i++ ];
        while ( lower_alpha( c.peek() ) || digit( c.peek() ) )
            name += c.s[ c.i++ ];
        return tab.named( name );
    }

    // ".p." or ".Np."
    [[nodiscard]] inline literal parse_dotted_literal( cursor& c, symbol_table& tab )
    {
        c.expect( '.', "'.'" );
        const bool negated = c.eat( 'N' );
        variable v = parse_variable( c, tab );
        c.expect( '.', "closing '.'" );
        return literal( std::move( v ), negated );
    }

    struct parsed_item
    {
        enum class tag
        {
            disjunctive,
            conjunctive,
            constant
        };
        tag what;
        bool truth = false;
        std::vector< literal > lits;
        std::size_t position = 0;
    };

    [[nodiscard]] inline parsed_item parse_item( cursor& c, symbol_table& tab )
    {
        parsed_item item;
        item.position = c.i;
        if ( c.eat( '.' ) )
        {
            if ( c.eat( '0' ) )
                item.truth = false;
            else if ( c.eat( '1' ) )
                item.truth = true;
            else
                throw parse_error( "expected constant .0. or .1.", c.i );
            c.expect( '.', "closing '.'" );
            item.what = parsed_item::tag::constant;
            return item;
        }
        if ( c.eat( 'D' ) )
            item.what = parsed_item::tag::disjunctive;
        else if ( c.eat( 'C' ) )
            item.what = parsed_item::tag::conjunctive;
        else
            throw parse_error( "expected an element (D..., C..., .0. or .1.)", c.i );
        if ( c.peek() != '.' )
            throw parse_error( "element needs at least one literal", c.i );
        while ( c.peek() == '.' )
            item.lits.push_back( parse_dotted_literal( c, tab ) );
        return item;
    }

    [[nodiscard]] inline std::vector< parsed_item > parse_item_list( std::string_view text,
                                                                     symbol_table& tab )
    {
        cursor c{ text };
        c.skip_spaces();
        c.expect( '[', "'['" );
        std::vector< parsed_item > items;
        if ( !c.eat( ']' ) )
        {
            items.push_back( parse_item( c, tab ) );
            while ( c.eat( ',' ) )
            {
                c.skip_spaces();
                items.push_back( parse_item( c, tab ) );
            }
            c.expect( ']', "']' or ','" );
        }
        c.skip_spaces();
        if ( !c.done() )
            throw parse_error( "unexpected trailing input", c.i );
        return items;
    }
} // namespace detail

[[nodiscard]] inline std::vector< clause > parse_cnf_list( std::string_view text,
                                                           symbol_table& tab )
{
    std::vector< clause > out;
    for ( auto& item : detail::parse_item_list( text, tab ) )
    {
        if ( item.what == detail::parsed_item::tag::conjunctive )
            throw parse_error( "conjunctive element in a clause list", item.position );
        if ( item.what == detail::parsed_item::tag::constant )
            out.push_back( clause::constant( item.truth ) );
        else
            out.push_back( clause::of( std::move( item.lits ) ) );
    }
    return out;
}

[[nodiscard]] inline std::vector< co_clause > parse_dnf_list( std::string_view text,
                                                              symbol_table& tab )
{
    std::vector< co_clause > out;
    for ( auto& item : detail::parse_item_list( text, tab ) )
    {
        if ( item.what == detail::parsed_item::tag::disjunctive )
            throw parse_error( "disjunctive element in a conjunct list", item.position );
        if ( item.what == detail::parsed_item::tag::constant )
            out.push_back( co_clause::constant( item.truth ) );
        else
            out.push_back( co_clause::of( std::move( item.lits ) ) );
    }
    return out;
}

// convenience for one-off values where cross-parse identity does not matter
[[nodiscard]] inline std::vector< clause > parse_cnf_list( std::string_view text )
{
    symbol_table tab;
    return parse_cnf_list( text, tab );
}

[[nodiscard]] inline std::vector< co_clause > parse_dnf_list( std::string_view text )
{
    symbol_table tab;
    return parse_dnf_list( text, tab );
}

// ---- bracket-notation rendering -----------------------------------------

[[nodiscard]] inline std::string to_bracket( const literal& l )
{
    return "." + std::string( l.negated() ? "N" : "" ) + l.var().name() + ".";
}

template < element_form Form >
[[nodiscard]] std::string to_bracket( const element< Form >& e )
{
    if ( e.is_constant() )
        return e.truth() ? ".1." : ".0.";
    std::string out( 1, Form == element_form::disjunctive ? 'D' : 'C' );
    for ( const auto& l : e.literals() )
        out += to_bracket( l );
    return out;
}

template < element_form Form >
[[nodiscard]] std::string to_bracket( const std::vector< element< Form > >& side )
{
    std::string out = "[";
    for ( std::size_t i = 0; i < side.size(); ++i )
    {
        if ( i > 0 )
            out += ", ";
        out += to_bracket( side[ i ] );
    }
    return out + "]";
}

[[nodiscard]] inline std::string to_bracket( const clausal_form& zf )
{
    return to_bracket( zf.z );
}

// One line of a derivation, e.g. "X:  [D.p..Ns.] Y:  [C.q.]". The doubled
// space after the labels is deliberate and kept stable for exact matching.
[[nodiscard]] inline std::string trace_line( const std::vector< clause >& x,
                                             const std::vector< co_clause >& y )
{
    return "X:  " + to_bracket( x ) + " Y:  " + to_bracket( y );
}

[[nodiscard]] inline std::string to_bracket( const normal_form& g )
{
    return trace_line( g.x, g.y );
}

// ---- infix notation ------------------------------------------------------

namespace detail
{
    // precedence: negation binds tightest, then conjunction, disjunction,
    // implication (right associative), equivalence loosest
    [[nodiscard]] inline int precedence( formula::kind k )
    {
        switch ( k )
        {
        case formula::kind::conjunction:
            return 3;
        case formula::kind::disjunction:
            return 2;
        case formula::kind::implication:
            return 1;
        case formula::kind::equivalence:
            return 0;
        default:
            return 4;
        }
    }

    [[nodiscard]] inline std::string infix_op( formula::kind k )
    {
        switch ( k )
        {
        case formula::kind::conjunction:
            return " ∧ "; // and
        case formula::kind::disjunction:
            return " ∨ "; // or
        case formula::kind::implication:
            return " → "; // arrow
        default:
            return " ≡ "; // equivalence
        }
    }

    [[nodiscard]] inline std::string infix_min( const formula& f, int min_prec )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
            return f.truth() ? "⊤" : "⊥";
        case formula::kind::literal:
        {
            const auto& l = f.as_literal();
            return ( l.negated() ? "¬" : "" ) + l.var().name();
        }
        case formula::kind::negation:
            return "¬" + infix_min( f.operand(), 4 );
        default:
        {
            const int p = precedence( f.what() );
            const bool right_assoc = f.what() == formula::kind::implication ||
                                     f.what() == formula::kind::equivalence;
            const std::string text = infix_min( f.left(), right_assoc ? p + 1 : p ) +
                                     infix_op( f.what() ) +
                                     infix_min( f.right(), right_assoc ? p : p + 1 );
            if ( p < min_prec )
                return "(" + text + ")";
            return text;
        }
        }
    }

    [[nodiscard]] inline std::string infix_full( const formula& f )
    {
        switch ( f.what() )
        {
        case formula::kind::constant:
        case formula::kind::literal:
            return infix_min( f, 4 );
        case formula::kind::negation:
            return "¬" + infix_full( f.operand() );
        default:
            return "(" + infix_full( f.left() ) + infix_op( f.what() ) +
                   infix_full( f.right() ) + ")";
        }
    }
} // namespace detail

enum class infix_parens
{
    minimal, // the notation used for printed interpolants
    full     // every binary connective parenthesized
};

[[nodiscard]] inline std::string to_infix( const formula& f,
                                           infix_parens mode = infix_parens::minimal )
{
    if ( mode == infix_parens::full )
        return detail::infix_full( f );
    return detail::infix_min( f, 0 );
}

namespace detail
{
    [[nodiscard]] formula parse_equivalence( cursor& c, symbol_table& tab );

    [[nodiscard]] inline formula parse_atom( cursor& c, symbol_table& tab )
    {
        c.skip_spaces();
        if ( c.eat( '(' ) )
        {
            formula f = parse_equivalence( c, tab );
            c.skip_spaces();
            c.expect( ')', "')'" );
            return f;
        }
        if ( c.eat( "⊥" ) || c.eat( 'F' ) )
            return formula::constant( false );
        if ( c.eat( "⊤" ) || c.eat( 'T' ) )
            return formula::constant( true );
        if ( lower_alpha( c.peek() ) || c.peek() == 'P' )
            return formula::lit( literal( parse_variable( c, tab ) ) );
        throw parse_error( "expected a formula", c.i );
    }

    [[nodiscard]] inline formula parse_negation( cursor& c, symbol_table& tab )
    {
        c.skip_spaces();
        if ( c.eat( "¬" ) || c.eat( '~' ) )
        {
            formula f = parse_negation( c, tab );
            // negating a literal just flips it
            if ( f.what() == formula::kind::literal )
                return formula::lit( !f.as_literal() );
            return formula::negation( std::move( f ) );
        }
        return parse_atom( c, tab );
    }

    [[nodiscard]] inline formula parse_conjunction( cursor& c, symbol_table& tab )
    {
        formula f = parse_negation( c, tab );
        c.skip_spaces();
        while ( c.eat( "∧" ) || c.eat( '&' ) )
        {
            f = formula::conjunction( std::move( f ), parse_negation( c, tab ) );
            c.skip_spaces();
        }
        return f;
    }

    [[nodiscard]] inline formula parse_disjunction( cursor& c, symbol_table& tab )
    {
        formula f = parse_conjunction( c, tab );
        c.skip_spaces();
        while ( c.eat( "∨" ) || c.eat( '|' ) )
        {
            f = formula::disjunction( std::move( f ), parse_conjunction( c, tab ) );
            c.skip_spaces();
        }
        return f;
    }

    [[nodiscard]] inline formula parse_implication( cursor& c, symbol_table& tab )
    {
        formula f = parse_disjunction( c, tab );
        c.skip_spaces();
        if ( c.eat( "→" ) || c.eat( "->" ) )
            return formula::implication( std::move( f ), parse_implication( c, tab ) );
        return f;
    }

    [[nodiscard]] inline formula parse_equivalence( cursor& c, symbol_table& tab )
    {
        formula f = parse_implication( c, tab );
        c.skip_spaces();
        if ( c.eat( "≡" ) || c.eat( "<->" ) )
            return formula::equivalence( std::move( f ), parse_equivalence( c, tab ) );
        return f;
    }
} // namespace detail

[[nodiscard]] inline formula parse_infix( std::string_view text, symbol_table& tab )
{
    detail::cursor c{ text };
    formula f = detail::parse_equivalence( c, tab );
    c.skip_spaces();
    if ( !c.done() )
        throw parse_error( "unexpected trailing input", c.i );
    return f;
}

[[nodiscard]] inline formula parse_infix( std::string_view text )
{
    symbol_table tab;
    return parse_infix( text, tab );
}

// ---- generic rendering ---------------------------------------------------

enum class text_style
{
    bracket,
    infix
};

[[nodiscard]] inline std::string render( const literal& l, text_style s )
{
    if ( s == text_style::bracket )
        return to_bracket( l );
    return ( l.negated() ? "¬" : "" ) + l.var().name();
}

template < element_form Form >
[[nodiscard]] std::string render( const element< Form >& e, text_style s )
{
    if ( s == text_style::bracket )
        return to_bracket( e );
    return to_infix( as_formula( e ), infix_parens::full );
}

template < element_form Form >
[[nodiscard]] std::string render( const std::vector< element< Form > >& side, text_style s )
{
    if ( s == text_style::bracket )
        return to_bracket( side );
    return to_infix( as_formula( side ), infix_parens::full );
}

[[nodiscard]] inline std::string render( const normal_form& g, text_style s )
{
    if ( s == text_style::bracket )
        return to_bracket( g );
    return to_infix( as_formula( g ), infix_parens::full );
}

[[nodiscard]] inline std::string render( const clausal_form& zf, text_style s )
{
    if ( s == text_style::bracket )
        return to_bracket( zf );
    return to_infix( as_formula( zf ), infix_parens::full );
}

[[nodiscard]] inline std::string render( const formula& f, text_style s )
{
    return to_infix( f, s == text_style::bracket ? infix_parens::minimal : infix_parens::full );
}

// ---- derivation rendering ------------------------------------------------

namespace detail
{
    [[nodiscard]] inline std::string case_name( assembly_case how )
    {
        switch ( how )
        {
        case assembly_case::or_case:
            return "or-case";
        case assembly_case::and_case:
            return "and-case";
        default:
            return "standard";
        }
    }

    [[nodiscard]] inline std::string base_name( base_case_kind base )
    {
        switch ( base )
        {
        case base_case_kind::no_shared_vars:
            return "no-shared-vars";
        case base_case_kind::no_pairs:
            return "no-pairs";
        case base_case_kind::x_empty:
            return "x-empty";
        default:
            return "y-empty";
        }
    }

    inline void render_trace_into( const elimination_trace& t, int depth, std::string& out )
    {
        out.append( static_cast< std::size_t >( depth ) * 4, ' ' );
        out += trace_line( t.x(), t.y() );
        if ( t.is_leaf() )
        {
            out += "  -- leaf ";
            out += t.result() ? ".1." : ".0.";
            out += " (" + base_name( t.base() ) + ")\n";
            return;
        }
        out += "  -- eliminate " + t.eliminated().name() + " (" + case_name( t.how() ) + ")\n";
        render_trace_into( t.g1(), depth + 1, out );
        render_trace_into( t.g2(), depth + 1, out );
    }
} // namespace detail

[[nodiscard]] inline std::string render_trace( const elimination_trace& t )
{
    std::string out;
    detail::render_trace_into( t, 0, out );
    return out;
}

[[nodiscard]] inline std::string render_refutation( const refutation_tree& t )
{
    std::string out = "Z: " + to_bracket( t.root() );
    if ( t.is_axiom() )
        return out + "  -- axiom\n";
    out += "  -- eliminate " + t.eliminated().name();
    out += t.branch() == rule_branch::keep_positive ? " (positive side)\n" : " (negative side)\n";
    return out + render_refutation( t.child() );
}

} // namespace refitp
