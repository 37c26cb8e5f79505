#pragma once

#include "tucensus/errors.hpp"
#include "tucensus/graph.hpp"
#include "tucensus/matrix.hpp"
#include "tucensus/enumeration.hpp"
#include "tucensus/catalog.hpp"
#include "tucensus/report.hpp"
#include "tucensus/spectral.hpp"
#include "tucensus/verify.hpp"
#include "tucensus/io.hpp"
#include "tucensus/cli.hpp"
