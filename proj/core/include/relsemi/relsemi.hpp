// Umbrella header.

#ifndef RELSEMI_RELSEMI_HPP_
#define RELSEMI_RELSEMI_HPP_

#include "relsemi/classify.hpp"
#include "relsemi/error.hpp"
#include "relsemi/fixtures.hpp"
#include "relsemi/generation.hpp"
#include "relsemi/harness.hpp"
#include "relsemi/io.hpp"
#include "relsemi/partition.hpp"
#include "relsemi/relation.hpp"
#include "relsemi/represent.hpp"
#include "relsemi/semigroup.hpp"

#endif  // RELSEMI_RELSEMI_HPP_
