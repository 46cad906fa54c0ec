#pragma once

#include "ferrers/board.hpp"
#include "ferrers/enumeration.hpp"
#include "ferrers/error.hpp"
#include "ferrers/graph.hpp"
#include "ferrers/labels.hpp"
#include "ferrers/parallel.hpp"
#include "ferrers/patterns.hpp"
#include "ferrers/permutation.hpp"
#include "ferrers/placement.hpp"
#include "ferrers/rewriting.hpp"
#include "ferrers/shifts.hpp"
#include "ferrers/text.hpp"
