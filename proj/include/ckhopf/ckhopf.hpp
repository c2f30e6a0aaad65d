#pragma once

#include "cache.hpp"
#include "canonical.hpp"
#include "chord.hpp"
#include "corpus.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph_poly.hpp"
#include "harness.hpp"
#include "hopf.hpp"
#include "io.hpp"
#include "prelie.hpp"
#include "rational.hpp"
#include "tensor.hpp"
