#pragma once

#include <flagcoh/cache.hpp>
#include <flagcoh/checker.hpp>
#include <flagcoh/cohomology.hpp>
#include <flagcoh/dynkin.hpp>
#include <flagcoh/linalg.hpp>
#include <flagcoh/polynomial.hpp>
#include <flagcoh/rational.hpp>
#include <flagcoh/schubert.hpp>
#include <flagcoh/space.hpp>
#include <flagcoh/tags.hpp>
#include <flagcoh/univariate.hpp>
#include <flagcoh/veronese.hpp>
#include <flagcoh/weyl.hpp>
