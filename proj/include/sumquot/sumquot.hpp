#pragma once

// Umbrella header: exact rational set algebra, the quotient-of-sumsets
// oracle, the two incidence curve families, multipartite clique search, and
// the witness-certifying pipeline.

#include "sumquot/corpus.hpp"
#include "sumquot/curves.hpp"
#include "sumquot/egt.hpp"
#include "sumquot/errors.hpp"
#include "sumquot/intpow.hpp"
#include "sumquot/io.hpp"
#include "sumquot/oracle.hpp"
#include "sumquot/pipeline.hpp"
#include "sumquot/rational.hpp"
#include "sumquot/ratset.hpp"
#include "sumquot/report.hpp"
#include "sumquot/rng.hpp"
#include "sumquot/slopes.hpp"
