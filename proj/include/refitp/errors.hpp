#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace refitp
{

// Base class for everything this library throws on bad input. Internal
// invariant breakage uses std::logic_error instead, so callers can tell
// "your input is wrong" apart from "the engine is wrong".
class error : public std::runtime_error
{
public:
    explicit error( const std::string& what ) : std::runtime_error( what ) {}
};

class parse_error : public error
{
    std::size_t _position;

public:
    parse_error( const std::string& what, std::size_t position )
        : error( what + " (at offset " + std::to_string( position ) + ")" ),
          _position( position )
    {}

    [[nodiscard]] std::size_t position() const { return _position; }
};

// Thrown when a truth-table sweep would need more variables than the cap allows.
class oracle_cap_error : public error
{
    int _cap;
    int _needed;

public:
    oracle_cap_error( int cap, int needed )
        : error( "formula has " + std::to_string( needed ) +
                 " variables, exceeding the oracle cap of " + std::to_string( cap ) ),
          _cap( cap ), _needed( needed )
    {}

    [[nodiscard]] int cap() const { return _cap; }
    [[nodiscard]] int needed() const { return _needed; }
};

class unassigned_variable_error : public error
{
public:
    explicit unassigned_variable_error( const std::string& name )
        : error( "valuation does not assign variable " + name )
    {}
};

// The implication handed to the interpolation engine is not valid. Carries a
// human-readable falsifying valuation such as "p=1, q=0".
class precondition_error : public error
{
    std::string _valuation;

public:
    explicit precondition_error( const std::string& valuation_text )
        : error( "input implication is not valid; falsifying valuation: " + valuation_text ),
          _valuation( valuation_text )
    {}

    [[nodiscard]] const std::string& falsifying_valuation() const { return _valuation; }
};

class not_eliminable_error : public error
{
public:
    explicit not_eliminable_error( const std::string& name )
        : error( "variable " + name + " has no eliminable complementary pair here" )
    {}
};

class strategy_error : public error
{
public:
    explicit strategy_error( const std::string& what ) : error( what ) {}
};

class generation_error : public error
{
public:
    explicit generation_error( const std::string& what ) : error( what ) {}
};

} // namespace refitp
