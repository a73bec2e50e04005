#pragma once

#include "hyperjulia/boundary.hpp"
#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "hyperjulia/hdq.hpp"
#include "hyperjulia/lemmas.hpp"
#include "hyperjulia/polynomial.hpp"
#include "hyperjulia/rational.hpp"
#include "hyperjulia/report.hpp"
#include "hyperjulia/self_map.hpp"
