#pragma once

#include "compose.hpp"
#include "construct.hpp"
#include "draft.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "families.hpp"
#include "galled.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "labelled.hpp"
#include "network.hpp"
#include "oracle.hpp"
#include "ptolemy.hpp"
#include "recognition.hpp"
#include "suites.hpp"
