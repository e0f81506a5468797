#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include <refitp/core.hpp>
#include <refitp/errors.hpp>

namespace refitp
{

// A clausal form refutes to an axiom when no complementary pair spans two
// clauses and no clause is falsum: such a conjunction is satisfiable, so it
// cannot entail bottom. Verum elements are inert and never block this.
[[nodiscard]] inline bool is_refutation_axiom( const clausal_form& zf )
{
    if ( rank( zf ) != 0 )
        return false;
    for ( const auto& c : zf.z )
        if ( c.is_constant() && !c.truth() )
            return false;
    return true;
}

enum class rule_branch
{
    keep_positive, // remainders of clauses that held the positive literal survive
    keep_negative // remainders of clauses that held the negative literal survive
};

// One elimination step. All occurrences of the chosen polarity are removed at
// once from every clause holding it; clauses holding only the opposite
// polarity are dropped; untouched clauses (constants included) pass through.
// A clause stripped down to nothing becomes falsum.
[[nodiscard]] inline clausal_form apply_rule( const clausal_form& zf, const variable& v,
                                              rule_branch branch )
{
    {
        const auto elim = eliminable_variables( zf );
        bool found = false;
        for ( const auto& e : elim )
            if ( e == v )
                found = true;
        if ( !found )
            throw not_eliminable_error( v.name() );
    }

    const literal kept( v, branch == rule_branch::keep_negative );
    std::vector< clause > remainders;
    std::vector< clause > untouched;
    for ( const auto& c : zf.z )
    {
        if ( c.mentions( v ) )
        {
            if ( c.contains( kept ) )
                remainders.push_back( c.without( kept ) );
            // clauses holding only the complement are dropped on this branch
        }
        else
        {
            untouched.push_back( c );
        }
    }

    clausal_form out{ std::move( remainders ) };
    out.z.insert( out.z.end(), untouched.begin(), untouched.end() );
    return out;
}

class refutation_tree
{
    struct node
    {
        clausal_form z;
        std::optional< variable > eliminated;
        rule_branch branch = rule_branch::keep_positive;
        std::shared_ptr< const node > child;
    };

    std::shared_ptr< const node > _n;

    explicit refutation_tree( std::shared_ptr< const node > n ) : _n( std::move( n ) ) {}

public:
    [[nodiscard]] static refutation_tree axiom( clausal_form zf )
    {
        if ( !is_refutation_axiom( zf ) )
            throw std::logic_error( "refutation axiom constructed from a non-axiom" );
        return refutation_tree( std::make_shared< const node >(
            node{ std::move( zf ), std::nullopt, rule_branch::keep_positive, nullptr } ) );
    }

    // Derives the child form itself, so a step is correct by construction;
    // the rank decrease is re-checked because the whole calculus terminates
    // through it.
    [[nodiscard]] static refutation_tree step( clausal_form zf, const variable& v,
                                               rule_branch branch, const refutation_tree& child )
    {
        const clausal_form expected = apply_rule( zf, v, branch );
        if ( !( expected == child.root() ) )
            throw std::logic_error( "refutation step child does not match the rule application" );
        if ( !( rank( child.root() ) < rank( zf ) ) )
            throw std::logic_error( "refutation step did not decrease rank" );
        return refutation_tree( std::make_shared< const node >(
            node{ std::move( zf ), v, branch, child._n } ) );
    }

    [[nodiscard]] const clausal_form& root() const { return _n->z; }
    [[nodiscard]] bool is_axiom() const { return !_n->child; }

    [[nodiscard]] const variable& eliminated() const
    {
        assert( !is_axiom() );
        return *_n->eliminated;
    }

    [[nodiscard]] rule_branch branch() const
    {
        assert( !is_axiom() );
        return _n->branch;
    }

    [[nodiscard]] refutation_tree child() const
    {
        assert( !is_axiom() );
        return refutation_tree( _n->child );
    }
};

// Searches for a refutation. The eliminated variable is always the lowest
// eliminable one, first trying the branch that keeps the positive remainders;
// one refuted branch suffices because the implication is valid exactly when
// both branches are valid.
[[nodiscard]] inline std::optional< refutation_tree > refute( const clausal_form& zf )
{
    if ( is_refutation_axiom( zf ) )
        return refutation_tree::axiom( zf );

    const auto elim = eliminable_variables( zf );
    if ( elim.empty() )
        return std::nullopt; // falsum present and nothing to eliminate: valid

    const variable v = elim.front();
    for ( rule_branch branch : { rule_branch::keep_positive, rule_branch::keep_negative } )
        if ( auto sub = refute( apply_rule( zf, v, branch ) ) )
            return refutation_tree::step( zf, v, branch, *sub );
    return std::nullopt;
}

} // namespace refitp
