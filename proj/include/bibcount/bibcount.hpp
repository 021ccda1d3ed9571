#pragma once

#include "bibcount/analysis.hpp"
#include "bibcount/comparison.hpp"
#include "bibcount/corpus.hpp"
#include "bibcount/crediting.hpp"
#include "bibcount/csv.hpp"
#include "bibcount/errors.hpp"
#include "bibcount/fixture.hpp"
#include "bibcount/format.hpp"
#include "bibcount/indicators.hpp"
#include "bibcount/report.hpp"
#include "bibcount/reproduce.hpp"
#include "bibcount/stats.hpp"
