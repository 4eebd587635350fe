#pragma once

#include "ghr/corpus.hpp"
#include "ghr/correspondence.hpp"
#include "ghr/error.hpp"
#include "ghr/faults.hpp"
#include "ghr/fuzzy.hpp"
#include "ghr/gamma_hemiring.hpp"
#include "ghr/harness.hpp"
#include "ghr/ideals.hpp"
#include "ghr/io.hpp"
#include "ghr/limits.hpp"
#include "ghr/monoid.hpp"
#include "ghr/operator_hemiring.hpp"
#include "ghr/product_structure.hpp"
#include "ghr/rational.hpp"
