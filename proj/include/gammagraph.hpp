#pragma once

#include "gammagraph/canonical.hpp"
#include "gammagraph/classifier.hpp"
#include "gammagraph/clutter.hpp"
#include "gammagraph/distance.hpp"
#include "gammagraph/domination.hpp"
#include "gammagraph/enumerate.hpp"
#include "gammagraph/errors.hpp"
#include "gammagraph/families.hpp"
#include "gammagraph/gamma_graph.hpp"
#include "gammagraph/graph.hpp"
#include "gammagraph/graph6.hpp"
#include "gammagraph/labelling.hpp"
#include "gammagraph/realizer.hpp"
#include "gammagraph/search.hpp"
#include "gammagraph/symbol_set.hpp"
#include "gammagraph/vertex_set.hpp"
