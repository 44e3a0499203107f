#pragma once

#include "analysis.hpp"
#include "extremal.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "modone.hpp"
#include "morphism.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "surd.hpp"
#include "verdict.hpp"
#include "word.hpp"
