#pragma once

/// \file jackbern.hpp
/// Umbrella header.

#include "jackbern/bernoulli.hpp"
#include "jackbern/cache.hpp"
#include "jackbern/closed_forms.hpp"
#include "jackbern/format.hpp"
#include "jackbern/jack.hpp"
#include "jackbern/json.hpp"
#include "jackbern/linalg.hpp"
#include "jackbern/memo.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/report.hpp"
#include "jackbern/series.hpp"
#include "jackbern/shifted.hpp"
#include "jackbern/suites.hpp"
#include "jackbern/sympoly.hpp"
