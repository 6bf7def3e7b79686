#pragma once

#include "gaugekit/campaign.hpp"
#include "gaugekit/conventions.hpp"
#include "gaugekit/coord_expr.hpp"
#include "gaugekit/field_io.hpp"
#include "gaugekit/field_spec.hpp"
#include "gaugekit/fieldnum.hpp"
#include "gaugekit/jet.hpp"
#include "gaugekit/liealg.hpp"
#include "gaugekit/random_fields.hpp"
#include "gaugekit/report.hpp"
#include "gaugekit/rng.hpp"
#include "gaugekit/sym/coefficient.hpp"
#include "gaugekit/sym/expr.hpp"
#include "gaugekit/sym/identities.hpp"
#include "gaugekit/sym/normalize.hpp"
#include "gaugekit/sym/parse.hpp"
#include "gaugekit/symnum.hpp"
#include "gaugekit/version.hpp"
