#pragma once

#include "whanoi/cost.hpp"
#include "whanoi/engine.hpp"
#include "whanoi/errors.hpp"
#include "whanoi/linalg.hpp"
#include "whanoi/model_json.hpp"
#include "whanoi/models.hpp"
#include "whanoi/oracle.hpp"
#include "whanoi/peg.hpp"
#include "whanoi/polynomial.hpp"
#include "whanoi/sequences.hpp"
#include "whanoi/state.hpp"
#include "whanoi/weights.hpp"
