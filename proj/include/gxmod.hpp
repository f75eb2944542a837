#pragma once

#include "gxmod/report.hpp"
#include "gxmod/group.hpp"
#include "gxmod/gwa.hpp"
#include "gxmod/crossed_module.hpp"
#include "gxmod/cat1.hpp"
#include "gxmod/cover_lift.hpp"
#include "gxmod/enumerate.hpp"
#include "gxmod/io.hpp"
#include "gxmod/equivalence.hpp"
#include "gxmod/fixtures.hpp"
