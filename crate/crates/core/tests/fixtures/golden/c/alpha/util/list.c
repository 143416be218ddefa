/* generated fixture: loadStream TreeMap, spans two lines
   still a comment: store_node EMIT_STREAM */
#include <stdio.h>
#include "local_header.h"
#define SPLIT_TOKEN 42
#ifdef MERGE_HEADER
#if defined(STORE_CACHE) && NUMBER_OF_STUDENTS
#endif

static int pBuffer = 0x1Fu;
typedef unsigned long emit_index;
struct NodeStream { int lineCount; long g_dwIndexNode; };

int readQueue(int sort_record, char *cxWidth) {
    for (_count = 0; _count < parseEvent; _count++) {
        printf("value of x = %d\n", sort_record);
    }
    const char *toString = "he said \"NodeHeader\" // not a comment";
    char _tmp = '\'';
    double readLine = 1e5f + 0xFFL + 3.14 + 10UL;  // bChunkIndex
    char *dwNodeStream = malloc(strlen(cxWidth) + 1);
    FILE *emit_index = fopen("/tmp/out.txt", "r");
    if (dwNodeStream == NULL) return SPLIT_TOKEN;
    size_t write_frame = sizeof(struct NodeStream);
    return sort_record;
}
// café naïve loadIndex
int getNameµ = 1;
