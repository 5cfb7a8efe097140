#pragma once

#include "ohara/coefficients.hpp"
#include "ohara/error.hpp"
#include "ohara/goh.hpp"
#include "ohara/koh.hpp"
#include "ohara/limits.hpp"
#include "ohara/marking.hpp"
#include "ohara/partitions.hpp"
#include "ohara/qpoly.hpp"
#include "ohara/serialize.hpp"
#include "ohara/verify.hpp"
