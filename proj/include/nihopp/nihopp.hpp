#pragma once

#include "nihopp/catalog.hpp"
#include "nihopp/exponents.hpp"
#include "nihopp/field.hpp"
#include "nihopp/permcheck.hpp"
#include "nihopp/prooflab.hpp"
#include "nihopp/report.hpp"
