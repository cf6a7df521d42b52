#pragma once

#include "netzd/error.hpp"
#include "netzd/random.hpp"
#include "netzd/strategy.hpp"
#include "netzd/markov.hpp"
#include "netzd/graph.hpp"
#include "netzd/engine.hpp"
#include "netzd/evolve.hpp"
#include "netzd/experiment.hpp"
