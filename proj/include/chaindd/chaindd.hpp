// chaindd: umbrella header.

#pragma once

#include "chaindd/analysis.hpp"
#include "chaindd/apply.hpp"
#include "chaindd/bigint.hpp"
#include "chaindd/circuit.hpp"
#include "chaindd/diagram.hpp"
#include "chaindd/dict.hpp"
#include "chaindd/manager.hpp"
#include "chaindd/oracle.hpp"
#include "chaindd/queens.hpp"
#include "chaindd/report.hpp"
#include "chaindd/runner.hpp"
#include "chaindd/selftest.hpp"
#include "chaindd/worstcase.hpp"
