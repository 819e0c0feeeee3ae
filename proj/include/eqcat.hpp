#pragma once

#include "eqcat/adjunction.hpp"
#include "eqcat/coherence.hpp"
#include "eqcat/green.hpp"
#include "eqcat/io/spec_json.hpp"
#include "eqcat/mackey.hpp"
#include "eqcat/pointed.hpp"
#include "eqcat/smash.hpp"
#include "eqcat/split.hpp"
#include "eqcat/suite.hpp"
