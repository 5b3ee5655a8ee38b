#pragma once

#include "parabolica/errors.hpp"
#include "parabolica/ratmat.hpp"
#include "parabolica/polynomial.hpp"
#include "parabolica/lie_algebra.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/root_data.hpp"
#include "parabolica/catalog.hpp"
#include "parabolica/types.hpp"
#include "parabolica/building.hpp"
#include "parabolica/config.hpp"
#include "parabolica/json_io.hpp"
#include "parabolica/commands.hpp"
#include "parabolica/selftest.hpp"
