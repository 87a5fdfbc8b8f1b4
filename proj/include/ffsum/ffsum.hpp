#pragma once

// Umbrella header for the whole toolkit.

#include "ffsum/charsum.hpp"
#include "ffsum/common.hpp"
#include "ffsum/cyclotomic.hpp"
#include "ffsum/gf.hpp"
#include "ffsum/lpoly.hpp"
#include "ffsum/report.hpp"
#include "ffsum/roots.hpp"
#include "ffsum/seqcorr.hpp"
#include "ffsum/symfun.hpp"
#include "ffsum/verify.hpp"
