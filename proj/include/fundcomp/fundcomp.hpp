#pragma once

#include "fundcomp/analysis.hpp"
#include "fundcomp/compounding.hpp"
#include "fundcomp/error.hpp"
#include "fundcomp/ingestion.hpp"
#include "fundcomp/report.hpp"
#include "fundcomp/series.hpp"
