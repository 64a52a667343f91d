// Umbrella header.
#pragma once

#include "cliquehom/complex.hpp"
#include "cliquehom/constructions.hpp"
#include "cliquehom/errors.hpp"
#include "cliquehom/experiment.hpp"
#include "cliquehom/generator_spec.hpp"
#include "cliquehom/gf2.hpp"
#include "cliquehom/graph.hpp"
#include "cliquehom/homology.hpp"
#include "cliquehom/json_io.hpp"
#include "cliquehom/rational.hpp"
#include "cliquehom/rng.hpp"
#include "cliquehom/testers.hpp"
#include "cliquehom/util.hpp"
