#ifndef STICKKNOT_STICKKNOT_HPP
#define STICKKNOT_STICKKNOT_HPP

#include "stickknot/bounds.hpp"
#include "stickknot/diagram.hpp"
#include "stickknot/equilateral.hpp"
#include "stickknot/errors.hpp"
#include "stickknot/exact.hpp"
#include "stickknot/gordan.hpp"
#include "stickknot/homfly.hpp"
#include "stickknot/knot_table.hpp"
#include "stickknot/laurent.hpp"
#include "stickknot/link_diagram.hpp"
#include "stickknot/pd_code.hpp"
#include "stickknot/polygon.hpp"
#include "stickknot/render.hpp"
#include "stickknot/sampler.hpp"
#include "stickknot/superbridge.hpp"
#include "stickknot/vec.hpp"

#endif  // STICKKNOT_STICKKNOT_HPP
