#ifndef P2CENSUS_P2CENSUS_HPP
#define P2CENSUS_P2CENSUS_HPP

#include "p2census/census.hpp"
#include "p2census/finite_field.hpp"
#include "p2census/local_field.hpp"
#include "p2census/matrix_groups.hpp"
#include "p2census/numtheory.hpp"
#include "p2census/oracles.hpp"
#include "p2census/render.hpp"
#include "p2census/rep_theory.hpp"

#endif
