#pragma once

#include "hamcirc/automorphism.hpp"
#include "hamcirc/certifier.hpp"
#include "hamcirc/dot.hpp"
#include "hamcirc/error.hpp"
#include "hamcirc/finite.hpp"
#include "hamcirc/graph_algorithms.hpp"
#include "hamcirc/hamiltonian.hpp"
#include "hamcirc/legge.hpp"
#include "hamcirc/multigraph.hpp"
#include "hamcirc/outerplanar_check.hpp"
#include "hamcirc/outerplanarity.hpp"
#include "hamcirc/quotient.hpp"
#include "hamcirc/whitehead.hpp"
#include "hamcirc/word.hpp"
