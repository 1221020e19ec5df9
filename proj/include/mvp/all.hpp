#pragma once

#include "mvp/arith.hpp"
#include "mvp/calculus.hpp"
#include "mvp/disord.hpp"
#include "mvp/errors.hpp"
#include "mvp/generators.hpp"
#include "mvp/mvp.hpp"
#include "mvp/parser.hpp"
#include "mvp/printer.hpp"
#include "mvp/serialize.hpp"
#include "mvp/series.hpp"
#include "mvp/term.hpp"
#include "mvp/transform.hpp"
