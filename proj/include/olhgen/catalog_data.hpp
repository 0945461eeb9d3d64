#pragma once

// Generated by tools/catalog_gen.cpp.

namespace olhgen::catalog_data {

inline constexpr const char* kEmbeddedJson = R"json([{"doubled":[[-3,1],[-1,-3],[1,3],[3,-1]],"m":2,"n":4,"source":"search"},{"doubled":[[-4,-2],[-2,4],[0,0],[2,-4],[4,2]],"m":2,"n":5,"source":"search"},{"doubled":[[-6,4,4],[-4,-2,2],[-2,2,-6],[0,-6,-4],[2,0,-2],[4,-4,6],[6,6,0]],"m":3,"n":7,"source":"search"},{"doubled":[[-7,-3,5,-1],[-5,5,-5,3],[-3,-1,-1,7],[-1,-5,1,-7],[1,3,3,-3],[3,7,-3,-5],[5,-7,-7,1],[7,1,7,5]],"m":4,"n":8,"source":"search"},{"doubled":[[-8,-4,-4,-8,4],[-6,-2,8,2,2],[-4,8,0,-4,-8],[-2,0,4,8,-2],[0,2,-8,6,8],[2,-8,-2,4,-6],[4,4,-6,0,-4],[6,6,6,-2,6],[8,-6,2,-6,0]],"m":5,"n":9,"source":"search"},{"doubled":[[-10,8,-10,8,6,2,0],[-8,-10,-2,2,-10,-10,-4],[-6,2,8,-2,8,-8,8],[-4,4,-4,-10,-8,10,2],[-2,-2,10,4,-6,8,4],[0,-6,4,-6,10,4,-10],[2,10,6,-4,-2,-4,-8],[4,-8,0,6,4,6,6],[6,-4,-8,0,2,0,-6],[8,0,-6,-8,0,-6,10],[10,6,2,10,-4,-2,-2]],"m":7,"n":11,"source":"search"},{"doubled":[[-11,9,9,-5,5,-9],[-9,-11,7,9,1,11],[-7,-7,-11,-7,3,-7],[-5,-5,-7,7,-1,-5],[-3,11,-9,-3,-11,7],[-1,-1,1,-1,-7,1],[1,3,5,-9,11,9],[3,7,3,5,-5,5],[5,5,-5,11,7,-3],[7,-3,11,1,-9,-11],[9,-9,-1,-11,-3,3],[11,1,-3,3,9,-1]],"m":6,"n":12,"source":"search"},{"doubled":[[-12,4,10,-2,4,8],[-10,-4,-10,12,6,6],[-8,2,8,4,-12,-12],[-6,0,4,-4,0,-6],[-4,-10,-2,-10,-2,-4],[-2,6,-12,-12,-8,2],[0,-12,0,6,8,-2],[2,12,-8,2,12,-8],[4,10,2,10,-10,12],[6,-8,-6,-6,-4,10],[8,8,6,-8,10,0],[10,-6,12,0,2,4],[12,-2,-4,8,-6,-10]],"m":6,"n":13,"source":"search"},{"doubled":[[-14,4,-2,-8,-14,-8],[-12,0,-4,-4,8,12],[-10,10,10,2,-4,-2],[-8,-14,-6,6,-6,-6],[-6,2,-12,-10,14,2],[-4,-12,14,14,12,8],[-2,14,6,12,6,-10],[0,-6,-14,0,4,-4],[2,-10,12,-14,-8,6],[4,-4,2,8,-10,0],[6,12,-10,10,-12,14],[8,8,4,-6,10,-12],[10,6,8,-12,0,10],[12,-8,0,-2,-2,-14],[14,-2,-8,4,2,4]],"m":6,"n":15,"source":"search"},{"doubled":[[-16,-10,8,14,16,4],[-14,16,10,8,-14,-6],[-12,-4,-10,2,14,-8],[-10,6,-16,-14,4,6],[-8,14,-14,6,-6,0],[-6,-16,2,-12,-2,-12],[-4,-12,16,-10,-16,2],[-2,0,-12,-8,-12,14],[0,4,12,4,10,8],[2,-6,0,12,-10,12],[4,12,14,-2,6,-2],[6,-8,-6,-6,2,-16],[8,2,4,-4,-8,-10],[10,-2,-2,0,8,-4],[12,8,6,-16,12,16],[14,-14,-8,16,-4,10],[16,10,-4,10,0,-14]],"m":6,"n":17,"source":"search"},{"doubled":[[-18,18,-18,-2,2,-8],[-16,-6,8,-4,12,18],[-14,16,12,-10,-16,16],[-12,10,16,14,16,-18],[-10,-14,-4,8,-12,-4],[-8,-12,-8,12,-6,10],[-6,-16,2,18,0,-10],[-4,-8,-16,-14,14,2],[-2,4,10,-16,8,0],[0,2,6,6,-18,-12],[2,8,-12,-8,6,-2],[4,-2,4,2,-10,14],[6,-18,-6,-6,-2,6],[8,-10,-2,-12,10,-16],[10,-4,18,-18,-14,-14],[12,12,-10,4,-4,-6],[14,14,-14,10,-8,4],[16,6,14,16,18,12],[18,0,0,0,4,8]],"m":6,"n":19,"source":"search"},{"doubled":[[-19,-9,-13,-17,7,-3],[-17,-3,-11,-7,-13,-17],[-15,-17,13,17,-19,9],[-13,1,-7,-1,9,5],[-11,9,1,-9,-7,19],[-9,17,19,3,5,-19],[-7,7,-17,15,-1,7],[-5,11,3,-3,19,-7],[-3,-11,9,9,3,-13],[-1,5,15,-13,13,1],[1,19,7,11,-15,15],[3,-7,11,5,17,13],[5,-15,-19,7,11,3],[7,3,-5,-19,-11,17],[9,13,-9,19,-3,-15],[11,-13,5,1,-17,-11],[13,-19,-1,-5,1,-5],[15,-5,17,-15,-5,-1],[17,-1,-3,13,15,11],[19,15,-15,-11,-9,-9]],"m":6,"n":20,"source":"search"},{"doubled":[[-20,-14,-18,0,12,-16],[-18,20,-2,-20,0,8],[-16,-8,18,-4,-10,-12],[-14,2,-12,-6,-18,10],[-12,10,-14,16,8,12],[-10,18,4,20,18,-18],[-8,-20,6,18,-16,20],[-6,0,2,8,-20,4],[-4,-12,-6,-16,20,6],[-2,-4,12,-2,-2,-4],[0,8,16,2,16,14],[2,-10,-8,-14,2,0],[4,-6,0,14,-8,-10],[6,14,14,-10,-6,-14],[8,12,8,4,4,-6],[10,-18,20,-18,6,2],[12,4,-10,-8,-14,-20],[14,-2,10,12,14,16],[16,16,-16,-12,-4,18],[18,-16,-20,6,10,-8],[20,6,-4,10,-12,-2]],"m":6,"n":21,"source":"search"},{"doubled":[[-15,5,9,-3,7,11,-11,7,-9,3,-15,5],[-13,1,1,13,-7,-11,11,-7,-1,-13,-13,1],[-11,7,-7,-11,13,-1,-1,-13,9,-3,15,-5],[-9,3,-15,5,-13,1,1,13,1,13,13,-1],[-7,-11,11,-7,11,-7,7,11,5,15,-3,-9],[-5,-15,3,9,-11,7,-7,-11,13,-1,-1,-13],[-3,-9,-5,-15,1,13,13,-1,-5,-15,3,9],[-1,-13,-13,1,-1,-13,-13,1,-13,1,1,13],[1,13,13,-1,-9,3,-15,5,11,-7,7,11],[3,9,5,15,9,-3,15,-5,3,9,5,15],[5,15,-3,-9,-3,-9,-5,-15,-11,7,-7,-11],[7,11,-11,7,3,9,5,15,-3,-9,-5,-15],[9,-3,15,-5,-5,-15,3,9,-7,-11,11,-7],[11,-7,7,11,5,15,-3,-9,-15,5,9,-3],[13,-1,-1,-13,-15,5,9,-3,7,11,-11,7],[15,-5,-9,3,15,-5,-9,3,15,-5,-9,3]],"m":12,"n":16,"source":"paper-table"}])json";

}
