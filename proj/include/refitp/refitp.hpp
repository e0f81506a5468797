#pragma once

#include <refitp/bench.hpp>
#include <refitp/core.hpp>
#include <refitp/errors.hpp>
#include <refitp/formula.hpp>
#include <refitp/generate.hpp>
#include <refitp/interpolate.hpp>
#include <refitp/measure.hpp>
#include <refitp/normalize.hpp>
#include <refitp/parse.hpp>
#include <refitp/refutation.hpp>
#include <refitp/semantics.hpp>
