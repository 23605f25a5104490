#pragma once

#include "parking/core.hpp"
#include "parking/cycle_lemma.hpp"
#include "parking/enumeration.hpp"
#include "parking/errors.hpp"
#include "parking/rational_system.hpp"
#include "parking/shi_arrangement.hpp"
#include "parking/street.hpp"
#include "parking/word.hpp"
