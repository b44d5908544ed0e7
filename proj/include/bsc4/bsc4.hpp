#pragma once

#include "bsc4/analytic.hpp"
#include "bsc4/bigint.hpp"
#include "bsc4/classi.hpp"
#include "bsc4/json_io.hpp"
#include "bsc4/oracle.hpp"
#include "bsc4/profile.hpp"
#include "bsc4/reductions.hpp"
#include "bsc4/spectrum.hpp"
#include "bsc4/verifier.hpp"
