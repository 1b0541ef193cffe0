#pragma once

#include "asmlab/asm.hpp"
#include "asmlab/decomp.hpp"
#include "asmlab/detformulas.hpp"
#include "asmlab/error.hpp"
#include "asmlab/icemodel.hpp"
#include "asmlab/matrix.hpp"
#include "asmlab/mpoly.hpp"
#include "asmlab/quadext.hpp"
#include "asmlab/rational.hpp"
#include "asmlab/report.hpp"
#include "asmlab/sampling.hpp"
#include "asmlab/suite.hpp"
#include "asmlab/symfunc.hpp"
