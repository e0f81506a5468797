#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <set>
#include <utility>

#include <refitp/core.hpp>

namespace refitp
{

// An immutable propositional formula tree with cheap value copies (nodes are
// shared, never mutated). Interpolants only ever use constants, literals,
// conjunction and disjunction; the remaining connectives exist so arbitrary
// input formulas can be represented and normalized.
class formula
{
public:
    enum class kind
    {
        constant,
        literal,
        negation,
        conjunction,
        disjunction,
        implication,
        equivalence
    };

private:
    struct node
    {
        formula::kind what;
        bool truth = false;
        std::optional< refitp::literal > lit;
        std::shared_ptr< const node > lhs;
        std::shared_ptr< const node > rhs;
    };

    std::shared_ptr< const node > _n;

    explicit formula( std::shared_ptr< const node > n ) : _n( std::move( n ) ) {}

    [[nodiscard]] static formula binary( kind what, formula a, formula b )
    {
        return formula( std::make_shared< const node >(
            node{ what, false, std::nullopt, std::move( a._n ), std::move( b._n ) } ) );
    }

public:
    [[nodiscard]] static formula constant( bool truth )
    {
        return formula( std::make_shared< const node >(
            node{ kind::constant, truth, std::nullopt, nullptr, nullptr } ) );
    }

    [[nodiscard]] static formula lit( refitp::literal l )
    {
        return formula( std::make_shared< const node >(
            node{ kind::literal, false, std::move( l ), nullptr, nullptr } ) );
    }

    [[nodiscard]] static formula negation( formula f )
    {
        return formula( std::make_shared< const node >(
            node{ kind::negation, false, std::nullopt, std::move( f._n ), nullptr } ) );
    }

    [[nodiscard]] static formula conjunction( formula a, formula b )
    {
        return binary( kind::conjunction, std::move( a ), std::move( b ) );
    }

    [[nodiscard]] static formula disjunction( formula a, formula b )
    {
        return binary( kind::disjunction, std::move( a ), std::move( b ) );
    }

    [[nodiscard]] static formula implication( formula a, formula b )
    {
        return binary( kind::implication, std::move( a ), std::move( b ) );
    }

    [[nodiscard]] static formula equivalence( formula a, formula b )
    {
        return binary( kind::equivalence, std::move( a ), std::move( b ) );
    }

    [[nodiscard]] kind what() const { return _n->what; }

    [[nodiscard]] bool truth() const
    {
        assert( what() == kind::constant );
        return _n->truth;
    }

    [[nodiscard]] const refitp::literal& as_literal() const
    {
        assert( what() == kind::literal );
        return *_n->lit;
    }

    [[nodiscard]] formula operand() const
    {
        assert( what() == kind::negation );
        return formula( _n->lhs );
    }

    [[nodiscard]] formula left() const
    {
        assert( _n->lhs && what() != kind::negation );
        return formula( _n->lhs );
    }

    [[nodiscard]] formula right() const
    {
        assert( _n->rhs );
        return formula( _n->rhs );
    }

    friend bool operator==( const formula& a, const formula& b )
    {
        if ( a._n == b._n )
            return true;
        if ( a.what() != b.what() )
            return false;
        switch ( a.what() )
        {
        case kind::constant:
            return a.truth() == b.truth();
        case kind::literal:
            return a.as_literal() == b.as_literal();
        case kind::negation:
            return a.operand() == b.operand();
        default:
            return a.left() == b.left() && a.right() == b.right();
        }
    }
};

[[nodiscard]] inline std::size_t node_count( const formula& f )
{
    switch ( f.what() )
    {
    case formula::kind::constant:
    case formula::kind::literal:
        return 1;
    case formula::kind::negation:
        return 1 + node_count( f.operand() );
    default:
        return 1 + node_count( f.left() ) + node_count( f.right() );
    }
}

inline void collect_vars( const formula& f, std::set< variable >& out )
{
    switch ( f.what() )
    {
    case formula::kind::constant:
        return;
    case formula::kind::literal:
        out.insert( f.as_literal().var() );
        return;
    case formula::kind::negation:
        collect_vars( f.operand(), out );
        return;
    default:
        collect_vars( f.left(), out );
        collect_vars( f.right(), out );
    }
}

[[nodiscard]] inline std::set< variable > vars_of( const formula& f )
{
    std::set< variable > out;
    collect_vars( f, out );
    return out;
}

} // namespace refitp
