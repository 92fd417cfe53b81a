#pragma once

// Convenience umbrella: the whole library.

#include "signcox/cli.hpp"
#include "signcox/dickson.hpp"
#include "signcox/enumerate.hpp"
#include "signcox/errors.hpp"
#include "signcox/exact.hpp"
#include "signcox/graph.hpp"
#include "signcox/orders.hpp"
#include "signcox/presentations.hpp"
#include "signcox/report.hpp"
#include "signcox/representation.hpp"
#include "signcox/taucalc.hpp"
#include "signcox/words.hpp"
