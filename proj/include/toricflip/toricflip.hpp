// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "toricflip/antiflip.hpp"
#include "toricflip/contfrac.hpp"
#include "toricflip/error.hpp"
#include "toricflip/exact.hpp"
#include "toricflip/fiber.hpp"
#include "toricflip/int_matrix.hpp"
#include "toricflip/presolution.hpp"
#include "toricflip/singularities.hpp"
