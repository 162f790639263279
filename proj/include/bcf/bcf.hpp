#ifndef BCF_BCF_HPP
#define BCF_BCF_HPP

#include "bcf/build.hpp"
#include "bcf/eval.hpp"
#include "bcf/experiments.hpp"
#include "bcf/fraction.hpp"
#include "bcf/gragg1d.hpp"
#include "bcf/io.hpp"
#include "bcf/multi_index.hpp"
#include "bcf/outcome.hpp"
#include "bcf/rational.hpp"
#include "bcf/series.hpp"

#endif  // BCF_BCF_HPP
