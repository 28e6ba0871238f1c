#pragma once

#include "ordsgp/classification.hpp"
#include "ordsgp/congruence.hpp"
#include "ordsgp/document.hpp"
#include "ordsgp/element_set.hpp"
#include "ordsgp/elements.hpp"
#include "ordsgp/enumeration.hpp"
#include "ordsgp/error.hpp"
#include "ordsgp/ideals.hpp"
#include "ordsgp/limits.hpp"
#include "ordsgp/power.hpp"
#include "ordsgp/relation.hpp"
#include "ordsgp/report.hpp"
#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"
