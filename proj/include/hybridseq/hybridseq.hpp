#pragma once

#include "hybridseq/error.hpp"
#include "hybridseq/rational.hpp"
#include "hybridseq/quad_ext.hpp"
#include "hybridseq/hybrid.hpp"
#include "hybridseq/sequence.hpp"
#include "hybridseq/hybrid_sequence.hpp"
#include "hybridseq/identities.hpp"
#include "hybridseq/io.hpp"
#include "hybridseq/sweep.hpp"
