#pragma once

#include "ncdiag/closure.hpp"
#include "ncdiag/colored.hpp"
#include "ncdiag/cumulants.hpp"
#include "ncdiag/density.hpp"
#include "ncdiag/exact.hpp"
#include "ncdiag/json_io.hpp"
#include "ncdiag/measures.hpp"
#include "ncdiag/partition.hpp"
#include "ncdiag/series.hpp"
#include "ncdiag/tensor_map.hpp"
#include "ncdiag/verify.hpp"
#include "ncdiag/wishart.hpp"
