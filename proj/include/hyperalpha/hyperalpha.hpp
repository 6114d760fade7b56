#ifndef HYPERALPHA_HYPERALPHA_HPP
#define HYPERALPHA_HYPERALPHA_HPP

#include "hyperalpha/bounds.hpp"
#include "hyperalpha/combinatorics.hpp"
#include "hyperalpha/ensemble.hpp"
#include "hyperalpha/error.hpp"
#include "hyperalpha/generate.hpp"
#include "hyperalpha/hypergraph.hpp"
#include "hyperalpha/io.hpp"
#include "hyperalpha/report_json.hpp"
#include "hyperalpha/solver.hpp"
#include "hyperalpha/tensor_forms.hpp"

#endif  // HYPERALPHA_HYPERALPHA_HPP
